#pragma once

#include "pgl/group.hpp"
#include "pgl/presentation.hpp"

namespace pgl {

struct EnumerateOptions {
  int max_cosets = 200000;  // live-coset limit during enumeration
  int max_order = 4096;     // cap on the materialized multiplication table
};

/// Realize a finitely presented group as a ConcreteGroup by Todd-Coxeter
/// coset enumeration over the trivial subgroup (HLT relator scanning with a
/// full lookahead pass when the live-coset limit is hit). On completion the
/// cosets are renumbered in breadth-first order from the identity, witness
/// words are recorded per element, and the full multiplication table is
/// built. Throws LimitError when a cap is exceeded and InternalError if the
/// finished table fails its consistency checks.
GroupRef enumerate(const Presentation& pres, const EnumerateOptions& opt = {});

}  // namespace pgl
