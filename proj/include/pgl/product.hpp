#pragma once

#include "pgl/homomorphism.hpp"

namespace pgl {

/// Direct product G1 x G2 with its canonical embeddings and projections.
/// The pair (a, b) is encoded as element index a * |G2| + b; this encoding
/// is part of the public contract so reports are reproducible.
struct ProductGroup {
  GroupRef group;
  GroupRef left, right;
  Homomorphism embed_left, embed_right;  // iota_1, iota_2
  Homomorphism proj_left, proj_right;    // pi_1, pi_2

  int pair_index(int a, int b) const { return a * right->order() + b; }
  std::pair<int, int> split(int k) const {
    return {k / right->order(), k % right->order()};
  }
};

/// Componentwise table. Both factors must carry the same prime.
ProductGroup direct_product(const GroupRef& g1, const GroupRef& g2,
                            int max_order = 4096);

}  // namespace pgl
