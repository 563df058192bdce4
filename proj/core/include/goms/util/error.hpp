//
// Project GoMS - Copyright 2026 The GoMS Developers.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace goms {

// Every failure mode surfaced by the library carries one of these kinds so
// callers (and the CLI) can branch on the category without string matching.
enum class ErrorKind {
  // chem
  UnbalancedParentheses,
  UnclosedRingBond,
  RingBondConflict,
  DanglingBond,
  UnknownElement,
  UnsupportedFeature,
  DisconnectedMolecule,
  AromaticityError,
  DuplicateBond,
  EmptyMolecule,
  SchemaError,
  CoordinateCountMismatch,
  NonFiniteCoordinate,
  EmptyAtomSet,
  IndexOutOfRange,
  // fragmenter
  UnsupportedPolicy,
  // fingerprints
  WidthMismatch,
  // gos
  MissingConformer,
  // nn
  DimensionMismatch,
  LengthMismatch,
  EmptyGraph,
  NonFiniteGradient,
  MissingCoordinates,
  // lab
  PolicyMismatch,
  MoleculeMismatch,
  GenerationExhausted,
  // harness
  EmptyDataset,
  DivergedLoss,
  TooManyRejects,
  IoError,
  ConfigError,
  UsageError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  // Parse-style errors remember the byte offset of the offending input.
  Error(ErrorKind kind, std::size_t offset, const std::string& message);

  ErrorKind kind() const { return kind_; }
  std::optional<std::size_t> offset() const { return offset_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> offset_;
};

}  // namespace goms
