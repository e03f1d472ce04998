#pragma once

#include "pgl/enumerate.hpp"
#include "pgl/goursat.hpp"

namespace pgl {

/// The two-generator reference presentation: x1^p, x2^p, [x1,x2]^p plus the
/// class-2 relators for odd p; exponent 4 and [x1,x2]^2 for p = 2.
Presentation reference_presentation(int p);

/// Enumerated reference group: order p^3 for odd p, order 32 for p = 2.
GroupRef reference_group(int p, const EnumerateOptions& opt = {});

/// G / (G^p gamma_3(G)) for odd p, G / (G^4 gamma_3(G)) for p = 2. The
/// kernel's normality is verified, not assumed.
Quotient class3_quotient(const GroupRef& g);

struct LemmaIsoOutcome {
  enum class Status { Isomorphic, Skipped, Failed };
  Status status = Status::Skipped;
  std::string skip_reason;             // set when Skipped
  GroupRef quotient_group;             // class-3 quotient, when computed
  std::optional<Homomorphism> iso;     // quotient_group -> reference, when found
};

/// If G is 2-generated, not powerful, and (p = 2) its abelianization has no
/// C2 factor, the class-3 quotient must be isomorphic to the reference group;
/// a missing isomorphism is Failed. Ineligible groups are Skipped with the
/// first applicable reason.
LemmaIsoOutcome lemma_iso_check(const GroupRef& g);

struct IdentityCounterexample {
  int x = -1, y = -1;
  std::string which;
};

struct IdentityCheckReport {
  int quotient_order = 0;
  long long pairs_checked = 0;
  std::vector<IdentityCounterexample> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

/// In Q = G/gamma_4(G), for every pair (x, y): [x^p, y] = [x,y]^p [[x,y],x]^(p(p-1)/2)
/// and [x, [x,y]]^p = [x^p, [x,y]] for odd p; [x^4, y] = [x,y]^4 [[x,y],x]^6
/// and [x, [x,y]]^2 = [x^2, [x,y]] for p = 2. These are theorems in class <= 3,
/// so any counterexample is an engine bug.
IdentityCheckReport commutator_identity_check(const GroupRef& g);

struct Claim {
  std::string text;
  bool holds = false;
  bool degenerate = false;
};

struct WitnessReport {
  std::string scenario;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Claim> claims;
  double elapsed_ms = 0.0;

  bool all_hold() const;
  const Claim& claim(const std::string& text) const;
};

/// Main-theorem witness: H_i = <gens_i> must be 2-generated and not powerful
/// (and for p = 2 have no C2 factor in the abelianization). Builds
/// N_i = H_i^p gamma_3(H_i) (exponent 4 for p = 2), the generator-matching
/// isomorphism phi, K in G1 x G2, and w = ([x1, y1], 1); verifies w not in K
/// and w^p in [K, K] (odd p), or w^2 in K and w^4 in [K, K] (p = 2).
WitnessReport theorem_witness(const GroupRef& g1, std::pair<int, int> gens1,
                              const GroupRef& g2, std::pair<int, int> gens2);

/// Torsion witness: the image of x in H1^ab must have order exactly p^n and
/// split off as a direct factor. Builds N1 from a complement, H2 = C_{p^{n+m}},
/// N2 = H2^{p^n}, phi matching x-bar to the generator coset, and
/// w = (x^{p^{n-1}}, 1); verifies w not in K and w^p in [K, K].
WitnessReport torsion_witness(const GroupRef& h1, int x, int n, int m);

/// Transfer witness (p = 2): requires h outside Phi(H) with h^2 in [H, H].
/// Finds a maximal subgroup M not containing h and m in M with
/// h^2 Phi(M) = [h, m] Phi(M); verifies (hm)^2 in Phi(M) and hm not in M.
WitnessReport transfer_witness(const GroupRef& h, int h_elem);

enum class ViolationMode { Pointwise, Poset };

struct PointwiseViolation {
  int element;    // x with x^p in Phi(H), x outside H
  int subgroup;   // lattice node index of H
};
struct PosetViolation {
  int sub_h, sub_k;  // Phi(H) <= Phi(K) but H not <= K
};

struct ViolationCensus {
  ViolationMode mode = ViolationMode::Pointwise;
  long long examined = 0;
  std::vector<PointwiseViolation> pointwise;
  std::vector<PosetViolation> poset;
  SubgroupLattice lattice;
  long long count() const {
    return mode == ViolationMode::Pointwise
               ? static_cast<long long>(pointwise.size())
               : static_cast<long long>(poset.size());
  }
};

/// Pointwise mode lists all (x, H) with x^p in Phi(H) and x outside H (H a
/// proper subgroup); poset mode lists all ordered pairs (H, K), H != K, with
/// Phi(H) <= Phi(K) but H not <= K. The census quantifies the obstruction;
/// it never certifies resistance.
ViolationCensus phi_embedding_violations(const GroupRef& g, ViolationMode mode,
                                         int lattice_cap = 512);

/// True iff the abelian invariants of H^ab contain an entry equal to p.
bool has_cp_direct_factor(const Subgroup& h);
bool has_cp_direct_factor(const GroupRef& g);

}  // namespace pgl
