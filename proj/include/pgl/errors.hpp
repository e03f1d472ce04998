#pragma once

#include <stdexcept>
#include <string>

namespace pgl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input text rejected; offset is the 0-based byte position in the source.
struct ParseError : Error {
  ParseError(const std::string& what, int offset_)
      : Error(what + " (at offset " + std::to_string(offset_) + ")"),
        offset(offset_) {}
  int offset;
};

/// A configured cap was exceeded (coset limit, order cap, lattice cap).
struct LimitError : Error {
  using Error::Error;
};

/// Caller broke a precondition: bad index, parent mismatch, not a p-group, ...
struct DomainError : Error {
  using Error::Error;
};

/// Quotient by a non-normal subgroup; carries the witnessing conjugation
/// g^-1 * n * g that landed outside the subgroup.
struct NotNormalError : DomainError {
  NotNormalError(const std::string& what, int conjugator_, int member_,
                 int conjugate_)
      : DomainError(what), conjugator(conjugator_), member(member_),
        conjugate(conjugate_) {}
  int conjugator, member, conjugate;
};

/// An internal invariant broke. This is an engine bug; abort the computation.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace pgl
