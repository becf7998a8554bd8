// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATGAL_ERROR_HPP
#define LATGAL_ERROR_HPP

#include <sstream>
#include <stdexcept>
#include <string>

namespace latgal {

/// Error categories raised by the library. Numeric values are stable and
/// mirrored one-to-one by `latgal_status` in the C header.
enum class ErrorKind : int {
  IoError = 1,
  ParseError = 2,
  CycleError = 3,
  NotALattice = 4,
  NoBounds = 5,
  SizeLimit = 6,
  UnknownLabel = 7,
  NotClosed = 8,
  MissingBound = 9,
  NotClosureOperator = 10,
  NotInteriorOperator = 11,
  NotSupPreserving = 12,
  NotInfPreserving = 13,
  DomainMismatch = 14,
  NotIso = 15,
  BoundaryViolation = 16,
  HostMismatch = 17,
  ArityMismatch = 18,
  NotSublattice = 19,
  NotDistributive = 20,
  NotSubdirect = 21,
  NotComplete = 22,
  MissingCell = 23,
  UnmappedToken = 24,
  NotBinary = 25,
  InvalidArgument = 26,
};

const char* error_kind_name(ErrorKind kind);

/// True for errors caused by unreadable or malformed input files, as opposed
/// to inputs that parse fine but fail a mathematical validation. The CLI maps
/// the former to exit code 2 and the latter to exit code 1.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

namespace detail {
inline void stream_parts(std::ostringstream&) {}

template <typename T, typename... Rest>
void stream_parts(std::ostringstream& os, const T& value, const Rest&... rest) {
  os << value;
  stream_parts(os, rest...);
}
}  // namespace detail

template <typename... Parts>
std::string concat(const Parts&... parts) {
  std::ostringstream os;
  detail::stream_parts(os, parts...);
  return os.str();
}

template <typename... Parts>
[[noreturn]] void fail(ErrorKind kind, const Parts&... parts) {
  throw Error(kind, concat(parts...));
}

}  // namespace latgal

#endif
