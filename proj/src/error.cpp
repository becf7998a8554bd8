// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#include "latgal/error.hpp"

namespace latgal {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CycleError: return "CycleError";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoBounds: return "NoBounds";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::MissingBound: return "MissingBound";
    case ErrorKind::NotClosureOperator: return "NotClosureOperator";
    case ErrorKind::NotInteriorOperator: return "NotInteriorOperator";
    case ErrorKind::NotSupPreserving: return "NotSupPreserving";
    case ErrorKind::NotInfPreserving: return "NotInfPreserving";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::NotIso: return "NotIso";
    case ErrorKind::BoundaryViolation: return "BoundaryViolation";
    case ErrorKind::HostMismatch: return "HostMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotSublattice: return "NotSublattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotSubdirect: return "NotSubdirect";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::MissingCell: return "MissingCell";
    case ErrorKind::UnmappedToken: return "UnmappedToken";
    case ErrorKind::NotBinary: return "NotBinary";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IoError:
    case ErrorKind::ParseError:
    case ErrorKind::MissingCell:
      return true;
    default:
      return false;
  }
}

}  // namespace latgal
