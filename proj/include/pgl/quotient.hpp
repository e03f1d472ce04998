#pragma once

#include "pgl/homomorphism.hpp"

namespace pgl {

/// Materialized quotient H/N of a subgroup by a normal subgroup. Coset 0 is
/// N itself; cosets are numbered by their smallest parent element, scanning
/// H in ascending order, so the construction is canonical.
struct Quotient {
  Subgroup domain;          // H
  Subgroup kernel;          // N
  GroupRef group;           // H/N as a ConcreteGroup
  std::vector<int> coset_of;  // parent element -> quotient index, -1 outside H
  std::vector<int> reps;      // quotient index -> smallest coset representative

  /// Checked map of a parent element lying in H.
  int map(int parent_element) const;
};

/// Throws NotNormalError (with a conjugation counterexample) when n is not
/// normal in h.
Quotient quotient(const Subgroup& h, const Subgroup& n);

/// Whole-group quotient with the natural projection.
std::pair<Quotient, Homomorphism> quotient_with_projection(const GroupRef& g,
                                                           const Subgroup& n);

/// The subgroup as its own ConcreteGroup (quotient by the trivial subgroup).
Quotient materialize(const Subgroup& h);

/// H / [H, H].
Quotient abelianization(const Subgroup& h);

}  // namespace pgl
