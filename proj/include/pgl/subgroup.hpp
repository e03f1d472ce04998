#pragma once

#include <array>
#include <span>

#include "pgl/group.hpp"

namespace pgl {

/// Subset of a ConcreteGroup closed under multiplication and inversion,
/// carried as a sorted element list plus a generating subset.
class Subgroup {
 public:
  Subgroup() = default;

  /// Verifies sortedness, identity membership, closure, and that the
  /// generators lie inside and generate the element set.
  static Subgroup from_elements(GroupRef parent, std::vector<int> elements,
                                std::vector<int> generators);

  const GroupRef& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  const std::vector<int>& generators() const { return generators_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(int x) const;
  bool subset_of(const Subgroup& other) const;
  bool same_elements(const Subgroup& other) const;
  bool is_whole() const { return order() == parent_->order(); }
  bool is_trivial() const { return order() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  friend Subgroup unchecked_subgroup(GroupRef, std::vector<int>, std::vector<int>);
  GroupRef parent_;
  std::vector<int> elements_;
  std::vector<int> generators_;
};

Subgroup whole_group(const GroupRef& g);
Subgroup trivial_subgroup(const GroupRef& g);

/// Smallest subgroup containing the seed; generators = seed (deduplicated).
Subgroup closure(const GroupRef& g, std::span<const int> seed);

/// Greedy small generating set for the given closed element set
/// (ascending element order, deterministic).
std::vector<int> reduce_generators(const GroupRef& g, std::span<const int> elements);

/// Smallest normal subgroup of g containing the seed.
Subgroup normal_closure(const GroupRef& g, std::span<const int> seed);

/// Subgroup generated by all commutators [a, b], a in A, b in B.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);

/// Subgroup generated by the k-th powers of the elements of h.
Subgroup power_subgroup(const Subgroup& h, long long k);

/// Subgroup generated by A u B. When the elementwise set product A*B is
/// itself a subgroup, cross-checks |A*B| = |A||B|/|A n B|.
Subgroup product_subgroup(const Subgroup& a, const Subgroup& b);

/// Frattini subgroup H^p [H, H]. Requires the parent to be a p-group.
Subgroup frattini(const Subgroup& h);

/// gamma_1 = H, gamma_{n+1} = [gamma_n, H]; returned until stabilization.
std::vector<Subgroup> lower_central_series(const Subgroup& h);

/// gamma_k(H), reading past the stabilized tail of the series.
Subgroup lower_central_term(const Subgroup& h, int k);

/// Nilpotency class: number of strict steps in the lower central series.
int nilpotency_class(const Subgroup& h);

Subgroup center(const GroupRef& g);

/// Normalizer of s in its parent group.
Subgroup normalizer(const Subgroup& s);

/// Checks n <= h and closure of n under conjugation by the generators of h.
/// On failure, *witness holds {conjugator, member, conjugate}.
bool is_normal_in(const Subgroup& n, const Subgroup& h,
                  std::array<int, 3>* witness = nullptr);

bool is_abelian(const Subgroup& h);

/// Burnside basis: a minimal generating set of size d(H), chosen greedily by
/// ascending element index. Requires the parent to be a p-group.
std::vector<int> minimal_generators(const Subgroup& h);

/// [H, H] <= H^p (odd p), or [H, H] <= H^4 (p = 2).
bool is_powerful(const Subgroup& h);
bool is_powerful(const GroupRef& g);

}  // namespace pgl
