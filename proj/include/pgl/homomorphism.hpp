#pragma once

#include <functional>
#include <optional>

#include "pgl/subgroup.hpp"

namespace pgl {

/// Validated total map between two ConcreteGroups.
struct Homomorphism {
  GroupRef source, target;
  std::vector<int> image;  // one target index per source element

  int operator()(int x) const { return image.at(x); }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  Subgroup kernel() const;
  Subgroup image_subgroup() const;

  /// First (a, b) with image[a*b] != image[a]*image[b], if any.
  std::optional<std::array<int, 2>> find_violation() const;
  void require_valid(const std::string& context) const;
};

Homomorphism identity_hom(const GroupRef& g);
/// second(first(x)).
Homomorphism compose(const Homomorphism& second, const Homomorphism& first);

struct GeneratorImageResult {
  std::optional<Homomorphism> hom;
  // Multiplicativity violated at (bad_a, bad_b) when hom is empty.
  int bad_a = -1, bad_b = -1;
};

/// Extend generator images to a full map (breadth-first over the Cayley
/// graph) and verify multiplicativity on all pairs. `gens` must generate g.
GeneratorImageResult hom_from_images(const GroupRef& g, const GroupRef& h,
                                     std::span<const int> gens,
                                     std::span<const int> images);
/// Same, with gens = g->generator_elements().
GeneratorImageResult hom_from_images(const GroupRef& g, const GroupRef& h,
                                     std::span<const int> images);

/// Backtracking isomorphism search over images of a minimal generating set,
/// pruned by structural fingerprints and partial-closure orders. Candidate
/// images are tried by ascending element order, then index; the search is
/// exhaustive, so nullopt is a proof of non-isomorphism.
std::optional<Homomorphism> find_isomorphism(const GroupRef& g, const GroupRef& h);

/// Visit every isomorphism g -> h in deterministic (lexicographic by
/// generator images) order; return false from the visitor to stop early.
void for_each_isomorphism(const GroupRef& g, const GroupRef& h,
                          const std::function<bool(const Homomorphism&)>& visit);

std::vector<Homomorphism> all_isomorphisms(const GroupRef& g, const GroupRef& h);
long long count_isomorphisms(const GroupRef& g, const GroupRef& h);

}  // namespace pgl
