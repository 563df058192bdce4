//
// Project GoMS - Copyright 2026 The GoMS Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "goms/util/error.hpp"

namespace goms {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnbalancedParentheses: return "UnbalancedParentheses";
    case ErrorKind::UnclosedRingBond: return "UnclosedRingBond";
    case ErrorKind::RingBondConflict: return "RingBondConflict";
    case ErrorKind::DanglingBond: return "DanglingBond";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::UnsupportedFeature: return "UnsupportedFeature";
    case ErrorKind::DisconnectedMolecule: return "DisconnectedMolecule";
    case ErrorKind::AromaticityError: return "AromaticityError";
    case ErrorKind::DuplicateBond: return "DuplicateBond";
    case ErrorKind::EmptyMolecule: return "EmptyMolecule";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::CoordinateCountMismatch: return "CoordinateCountMismatch";
    case ErrorKind::NonFiniteCoordinate: return "NonFiniteCoordinate";
    case ErrorKind::EmptyAtomSet: return "EmptyAtomSet";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnsupportedPolicy: return "UnsupportedPolicy";
    case ErrorKind::WidthMismatch: return "WidthMismatch";
    case ErrorKind::MissingConformer: return "MissingConformer";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::NonFiniteGradient: return "NonFiniteGradient";
    case ErrorKind::MissingCoordinates: return "MissingCoordinates";
    case ErrorKind::PolicyMismatch: return "PolicyMismatch";
    case ErrorKind::MoleculeMismatch: return "MoleculeMismatch";
    case ErrorKind::GenerationExhausted: return "GenerationExhausted";
    case ErrorKind::EmptyDataset: return "EmptyDataset";
    case ErrorKind::DivergedLoss: return "DivergedLoss";
    case ErrorKind::TooManyRejects: return "TooManyRejects";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "UnknownError";
}

namespace {

std::string format_message(ErrorKind kind, const std::string& message) {
  return std::string(to_string(kind)) + ": " + message;
}

std::string format_message(ErrorKind kind, std::size_t offset,
                           const std::string& message) {
  return std::string(to_string(kind)) + " at offset " +
         std::to_string(offset) + ": " + message;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(format_message(kind, message)), kind_(kind) {}

Error::Error(ErrorKind kind, std::size_t offset, const std::string& message)
    : std::runtime_error(format_message(kind, offset, message)),
      kind_(kind),
      offset_(offset) {}

}  // namespace goms
