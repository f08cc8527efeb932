#pragma once

#include <stdexcept>
#include <string>

namespace fockforge {

/// Caller broke an operation precondition (mismatched variable sets,
/// zero mode, color outside the palette, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Structurally valid input outside the supported domain, e.g. root
/// enumeration on an indefinite lattice.
class UnsupportedInputError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A computation needed more series/operator headroom than the requested
/// truncation order provides.  Raised instead of returning a silently
/// truncated (wrong) answer.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fockforge
