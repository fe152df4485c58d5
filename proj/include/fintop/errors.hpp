#pragma once

#include <stdexcept>
#include <string>

namespace fintop {

/// Malformed input: unreadable file, bad rational literal, or an open-set
/// family / neighborhood table that violates a topology axiom. The message
/// names the violated axiom.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented size cap was exceeded (carrier size, search space, ...).
/// Caps fail loudly; nothing degrades silently.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// An operation precondition was violated: carrier mismatch, unordered
/// function pair, unsatisfied preset gate, malformed chain, and so on.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fintop
