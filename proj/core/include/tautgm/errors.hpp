#pragma once

#include <stdexcept>
#include <string>

namespace tautgm {

/// An argument violates a documented precondition: box mismatch, index out
/// of range, malformed input text, non-injective factor map, and so on.
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// The request is well-formed but exceeds the sizes this engine will
/// materialize exactly. Raised instead of ever returning a truncated or
/// approximate answer.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency condition failed (e.g. a pairing block that is
/// nonsingular by construction came out singular). Indicates a bug, not a
/// user error.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tautgm
