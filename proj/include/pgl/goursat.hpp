#pragma once

#include <random>

#include "pgl/abelian.hpp"
#include "pgl/lattice.hpp"
#include "pgl/product.hpp"
#include "pgl/quotient.hpp"

namespace pgl {

/// The 5-tuple (H1, N1, H2, N2, phi) of Goursat's correspondence, carried as
/// the two materialized quotients plus an isomorphism between them.
struct GoursatTuple {
  Quotient q1;        // H1/N1, subgroups of the left factor
  Quotient q2;        // H2/N2, subgroups of the right factor
  Homomorphism phi;   // q1.group -> q2.group, bijective

  const Subgroup& h1() const { return q1.domain; }
  const Subgroup& n1() const { return q1.kernel; }
  const Subgroup& h2() const { return q2.domain; }
  const Subgroup& n2() const { return q2.kernel; }
};

/// Validates the tuple invariants; the error message names the broken one.
GoursatTuple make_goursat_tuple(Quotient q1, Quotient q2, Homomorphism phi);

/// K = {(h1, h2) in H1 x H2 | phi(h1 N1) = h2 N2}. Checks the exact-sequence
/// order |K| = |N2| |H1|.
Subgroup goursat_build(const ProductGroup& p, const GoursatTuple& t);

/// H1 = pi1(K), H2 = pi2(K), N1 = {a | (a, 1) in K}, N2 = {b | (1, b) in K},
/// phi induced by K.
GoursatTuple goursat_decompose(const ProductGroup& p, const Subgroup& k);

/// Equality as 5-tuples: same four subgroups and the same quotient map.
bool tuples_equal(const GoursatTuple& a, const GoursatTuple& b);

/// Normal pair (H, N <| H) drawn from a lattice, with its quotient.
struct QuotientPair {
  int h_node, n_node;
  Quotient q;
};
std::vector<QuotientPair> quotient_pairs(const SubgroupLattice& l);

struct GoursatCensus {
  int order1 = 0, order2 = 0;
  long long subgroup_count = 0;
  long long tuple_count = 0;
  std::vector<std::string> roundtrip_failures;

  bool ok() const { return subgroup_count == tuple_count && roundtrip_failures.empty(); }
};

/// Counts all subgroups of G1 x G2 and all valid 5-tuples, and checks
/// build(decompose(K)) = K for every subgroup K.
GoursatCensus goursat_census(const GroupRef& g1, const GroupRef& g2,
                             int lattice_cap = 512);

struct Lemma32Report {
  std::vector<int> generating_set;  // pair indices in the product
  int k_order = 0;
  bool closure_matches = false;     // <Z> = K
  bool frattini_contains = false;   // {1} x [H2, N2] <= Phi(K)
  bool ok() const { return closure_matches && frattini_contains; }
};

/// Z = lifts of a minimal generating set of H1, plus (1, y) for normal
/// generators y of N2; verifies <Z> = K and {1} x [H2, N2] <= Phi(K).
Lemma32Report lemma32_generators(const ProductGroup& p, const GoursatTuple& t);

struct Lemma34Report {
  bool commutator_equals_left = false;  // [K, K] = iota1([H1, H1])
  bool alpha_injective = false;
  bool beta_surjective = false;
  bool beta_well_defined = false;
  bool exact_at_middle = false;         // im(alpha) = ker(beta)
  bool split_consistent = false;        // informational, not a failure
  AbelianInvariants kab_invariants, n2_invariants, h1ab_invariants;
  bool ok() const {
    return commutator_equals_left && alpha_injective && beta_surjective &&
           beta_well_defined && exact_at_middle;
  }
};

/// Requires H2 abelian. Verifies [K,K] = [H1,H1] x {1} and exactness of
/// 1 -> N2 -> K^ab -> H1^ab -> 1; reports whether the abelian invariants
/// of K^ab match those of N2 + H1^ab (split-consistency).
Lemma34Report lemma34_verify(const ProductGroup& p, const GoursatTuple& t);

/// Seeded random valid tuples over a fixed product; used by property runs.
class TupleSampler {
 public:
  TupleSampler(const GroupRef& g1, const GroupRef& g2, int lattice_cap = 512);

  const ProductGroup& product() const { return product_; }
  GoursatTuple sample(std::mt19937_64& rng, bool require_abelian_h2);

 private:
  ProductGroup product_;
  std::vector<QuotientPair> pairs1_, pairs2_;
  std::vector<int> abelian_pairs2_;  // indices into pairs2_ with abelian H2
};

}  // namespace pgl
