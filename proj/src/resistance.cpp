#include "pgl/resistance.hpp"

#include <algorithm>
#include <chrono>

#include "pgl/errors.hpp"

namespace pgl {

namespace {

bool is_prime_int(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void require_p_group(const GroupRef& g, const std::string& op) {
  if (!g || !g->is_p_group())
    throw DomainError(op + " requires a p-group");
}

std::string elem_str(const GroupRef& g, int x) { return g->describe_element(x); }

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

}  // namespace

bool WitnessReport::all_hold() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const Claim& c) { return c.holds; });
}

const Claim& WitnessReport::claim(const std::string& text) const {
  for (const Claim& c : claims)
    if (c.text == text) return c;
  throw DomainError("no claim named '" + text + "'");
}

Presentation reference_presentation(int p) {
  if (!is_prime_int(p)) throw DomainError("reference presentation needs a prime");
  std::string text =
      p == 2 ? "gens: x1, x2; rels: x1^4, x2^4, [x1,x2]^2, [x1,x2,x1], [x1,x2,x2]"
             : "gens: x1, x2; rels: x1^" + std::to_string(p) + ", x2^" +
                   std::to_string(p) + ", [x1,x2]^" + std::to_string(p) +
                   ", [x1,x2,x1], [x1,x2,x2]";
  return parse_presentation(text);
}

GroupRef reference_group(int p, const EnumerateOptions& opt) {
  GroupRef g = enumerate(reference_presentation(p), opt);
  long long expected = p == 2 ? 32 : ipow(p, 3);
  if (g->order() != expected)
    throw InternalError("reference group has order " + std::to_string(g->order()) +
                        ", expected " + std::to_string(expected));
  return g;
}

Quotient class3_quotient(const GroupRef& g) {
  require_p_group(g, "class-3 quotient");
  Subgroup whole = whole_group(g);
  long long k = g->prime() == 2 ? 4 : g->prime();
  Subgroup n = product_subgroup(power_subgroup(whole, k),
                                lower_central_term(whole, 3));
  std::array<int, 3> w{};
  if (!is_normal_in(n, whole, &w))
    throw InternalError("G^p gamma_3(G) is not normal");  // characteristic, cannot happen
  return quotient(whole, n);
}

LemmaIsoOutcome lemma_iso_check(const GroupRef& g) {
  require_p_group(g, "lemma isomorphism check");
  LemmaIsoOutcome out;
  Subgroup whole = whole_group(g);
  if (minimal_generators(whole).size() != 2) {
    out.skip_reason = "not 2-generated";
    return out;
  }
  if (is_powerful(whole)) {
    out.skip_reason = "powerful";
    return out;
  }
  if (g->prime() == 2 && abelian_invariants(whole).contains(2)) {
    out.skip_reason = "abelianization has a C2 direct factor";
    return out;
  }
  Quotient q = class3_quotient(g);
  out.quotient_group = q.group;
  GroupRef ref = reference_group(g->prime());
  out.iso = find_isomorphism(q.group, ref);
  out.status = out.iso ? LemmaIsoOutcome::Status::Isomorphic
                       : LemmaIsoOutcome::Status::Failed;
  return out;
}

IdentityCheckReport commutator_identity_check(const GroupRef& g) {
  require_p_group(g, "commutator identity check");
  const int p = g->prime();
  Quotient q4 = quotient(whole_group(g), lower_central_term(whole_group(g), 4));
  const GroupRef& q = q4.group;

  IdentityCheckReport rep;
  rep.quotient_order = q->order();
  const long long ppow = p == 2 ? 4 : p;             // exponent in [x^k, y]
  const long long half = ppow * (ppow - 1) / 2;      // p(p-1)/2, or 6 for k=4
  for (int x = 0; x < q->order(); ++x) {
    int xk = q->power(x, ppow);
    int xp = q->power(x, p);
    for (int y = 0; y < q->order(); ++y) {
      ++rep.pairs_checked;
      int c = q->commutator(x, y);
      int lhs = q->commutator(xk, y);
      int rhs = q->mul(q->power(c, ppow), q->power(q->commutator(c, x), half));
      if (lhs != rhs)
        rep.counterexamples.push_back({x, y, "[x^k, y] expansion"});
      int aux_l = q->power(q->commutator(x, c), p);
      int aux_r = q->commutator(xp, c);
      if (aux_l != aux_r)
        rep.counterexamples.push_back({x, y, "[x, [x,y]]^p = [x^p, [x,y]]"});
    }
  }
  return rep;
}

namespace {

// Shared precondition checks for the main-theorem witness.
void check_witness_side(const GroupRef& g, const Subgroup& h, int side) {
  std::string tag = "H" + std::to_string(side);
  if (minimal_generators(h).size() != 2)
    throw DomainError("theorem witness: " + tag + " is not 2-generated");
  if (is_powerful(h))
    throw DomainError("theorem witness: " + tag + " is powerful");
  if (g->prime() == 2 && abelian_invariants(h).contains(2))
    throw DomainError("theorem witness: " + tag +
                      " has a C2 direct factor in its abelianization");
}

Subgroup witness_kernel(const Subgroup& h) {
  long long k = h.parent()->prime() == 2 ? 4 : h.parent()->prime();
  return product_subgroup(power_subgroup(h, k), lower_central_term(h, 3));
}

}  // namespace

WitnessReport theorem_witness(const GroupRef& g1, std::pair<int, int> gens1,
                              const GroupRef& g2, std::pair<int, int> gens2) {
  Timer timer;
  require_p_group(g1, "theorem witness");
  require_p_group(g2, "theorem witness");
  if (g1->prime() != g2->prime())
    throw DomainError("theorem witness: factors carry different primes");
  const int p = g1->prime();

  std::vector<int> s1{gens1.first, gens1.second};
  std::vector<int> s2{gens2.first, gens2.second};
  Subgroup h1 = closure(g1, s1);
  Subgroup h2 = closure(g2, s2);
  check_witness_side(g1, h1, 1);
  check_witness_side(g2, h2, 2);

  Quotient q1 = quotient(h1, witness_kernel(h1));
  Quotient q2 = quotient(h2, witness_kernel(h2));

  // phi matches generators: x1-bar |-> x2-bar, y1-bar |-> y2-bar.
  std::vector<int> qgens{q1.map(gens1.first), q1.map(gens1.second)};
  std::vector<int> qimgs{q2.map(gens2.first), q2.map(gens2.second)};
  auto ext = hom_from_images(q1.group, q2.group, qgens, qimgs);
  if (!ext.hom || !ext.hom->is_bijective())
    throw InternalError("theorem witness: generator-matching phi is not an isomorphism");

  ProductGroup prod = direct_product(g1, g2);
  GoursatTuple t = make_goursat_tuple(q1, q2, *ext.hom);
  Subgroup k = goursat_build(prod, t);
  Subgroup kk = commutator_subgroup(k, k);

  int c1 = g1->commutator(gens1.first, gens1.second);
  int w = prod.pair_index(c1, ConcreteGroup::identity);

  WitnessReport rep;
  rep.scenario = "theorem-witness";
  rep.inputs = {{"group1", g1->name().empty() ? "G1" : g1->name()},
                {"group2", g2->name().empty() ? "G2" : g2->name()},
                {"x1", elem_str(g1, gens1.first)},
                {"y1", elem_str(g1, gens1.second)},
                {"x2", elem_str(g2, gens2.first)},
                {"y2", elem_str(g2, gens2.second)},
                {"p", std::to_string(p)},
                {"w", "([x1, y1], 1)"}};
  rep.claims.push_back({"w not in K", !k.contains(w), false});
  if (p == 2) {
    int w2 = prod.group->power(w, 2);
    int w4 = prod.group->power(w, 4);
    bool degenerate = w4 == ConcreteGroup::identity;
    rep.claims.push_back({"w^2 in K", k.contains(w2), degenerate});
    rep.claims.push_back({"w^4 in [K, K]", kk.contains(w4), degenerate});
  } else {
    int wp = prod.group->power(w, p);
    bool degenerate = wp == ConcreteGroup::identity;
    rep.claims.push_back({"w^p in [K, K]", kk.contains(wp), degenerate});
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

WitnessReport torsion_witness(const GroupRef& h1, int x, int n, int m) {
  Timer timer;
  require_p_group(h1, "torsion witness");
  if (n < 1 || m < 1) throw DomainError("torsion witness: n and m must be >= 1");
  if (x < 0 || x >= h1->order()) throw DomainError("torsion witness: element out of range");
  const int p = h1->prime();

  Quotient ab = abelianization(whole_group(h1));
  int xbar = ab.map(x);
  long long want = ipow(p, n);
  if (ab.group->element_order(xbar) != want)
    throw DomainError("torsion witness: image of x in H1^ab has order " +
                      std::to_string(ab.group->element_order(xbar)) +
                      ", expected p^n = " + std::to_string(want));

  // Complement search: smallest canonical subgroup A with <x-bar> x A = H1^ab.
  Subgroup xbar_closure = closure(ab.group, std::vector<int>{xbar});
  SubgroupLattice lab = all_subgroups(ab.group);
  const Subgroup* complement = nullptr;
  for (const Subgroup& a : lab.nodes) {
    if (static_cast<long long>(a.order()) * want != ab.group->order()) continue;
    std::vector<int> meet;
    std::set_intersection(a.elements().begin(), a.elements().end(),
                          xbar_closure.elements().begin(),
                          xbar_closure.elements().end(), std::back_inserter(meet));
    if (meet.size() == 1) {
      complement = &a;
      break;
    }
  }
  if (!complement)
    throw DomainError("torsion witness: <x-bar> admits no direct complement in H1^ab");

  std::vector<int> n1_elems;
  for (int e = 0; e < h1->order(); ++e)
    if (complement->contains(ab.map(e))) n1_elems.push_back(e);
  Subgroup n1 =
      Subgroup::from_elements(h1, n1_elems, reduce_generators(h1, n1_elems));

  long long h2_order = ipow(p, n + m);
  GroupRef h2 = cyclic_group(static_cast<int>(h2_order), p);
  Subgroup h2_whole = whole_group(h2);
  Subgroup n2 = power_subgroup(h2_whole, want);

  Quotient q1 = quotient(whole_group(h1), n1);
  Quotient q2 = quotient(h2_whole, n2);
  std::vector<int> qgens{q1.map(x)};
  std::vector<int> qimgs{q2.map(1)};  // generator coset of the cyclic side
  auto ext = hom_from_images(q1.group, q2.group, qgens, qimgs);
  if (!ext.hom || !ext.hom->is_bijective())
    throw InternalError("torsion witness: phi is not an isomorphism");

  ProductGroup prod = direct_product(h1, h2);
  GoursatTuple t = make_goursat_tuple(q1, q2, *ext.hom);
  Subgroup k = goursat_build(prod, t);
  Subgroup kk = commutator_subgroup(k, k);

  int w = prod.pair_index(h1->power(x, ipow(p, n - 1)), ConcreteGroup::identity);
  int wp = prod.group->power(w, p);

  WitnessReport rep;
  rep.scenario = "torsion-witness";
  rep.inputs = {{"group", h1->name().empty() ? "H1" : h1->name()},
                {"x", elem_str(h1, x)},
                {"n", std::to_string(n)},
                {"m", std::to_string(m)},
                {"p", std::to_string(p)},
                {"w", "(x^{p^(n-1)}, 1)"}};
  bool degenerate = wp == ConcreteGroup::identity;
  rep.claims.push_back({"w not in K", !k.contains(w), false});
  rep.claims.push_back({"w^p in [K, K]", kk.contains(wp), degenerate});
  rep.elapsed_ms = timer.ms();
  return rep;
}

WitnessReport transfer_witness(const GroupRef& h, int h_elem) {
  Timer timer;
  require_p_group(h, "transfer witness");
  if (h->prime() != 2) throw DomainError("transfer witness requires p = 2");
  if (h_elem < 0 || h_elem >= h->order())
    throw DomainError("transfer witness: element out of range");

  Subgroup whole = whole_group(h);
  Subgroup phi_h = frattini(whole);
  Subgroup comm = commutator_subgroup(whole, whole);
  if (phi_h.contains(h_elem))
    throw DomainError("transfer witness: h lies in Phi(H)");
  int h2 = h->power(h_elem, 2);
  if (!comm.contains(h2))
    throw DomainError("transfer witness: h^2 is not in [H, H]");

  SubgroupLattice lat = all_subgroups(h);
  for (int idx : lat.of_order(h->order() / 2)) {
    const Subgroup& max = lat.nodes[idx];
    if (max.contains(h_elem)) continue;
    Subgroup phi_m = frattini(max);
    for (int m : max.elements()) {
      // h^2 Phi(M) = [h, m] Phi(M)
      int c = h->commutator(h_elem, m);
      if (!phi_m.contains(h->mul(h->inv(c), h2))) continue;
      int hm = h->mul(h_elem, m);
      WitnessReport rep;
      rep.scenario = "transfer-witness";
      rep.inputs = {{"group", h->name().empty() ? "H" : h->name()},
                    {"h", elem_str(h, h_elem)},
                    {"M", "maximal subgroup #" + std::to_string(idx)},
                    {"m", elem_str(h, m)}};
      rep.claims.push_back({"h not in M", !max.contains(h_elem), false});
      rep.claims.push_back(
          {"h^2 Phi(M) = [h, m] Phi(M)", phi_m.contains(h->mul(h->inv(c), h2)), false});
      rep.claims.push_back({"(hm)^2 in Phi(M)", phi_m.contains(h->power(hm, 2)), false});
      rep.claims.push_back({"hm not in M", !max.contains(hm), false});
      rep.elapsed_ms = timer.ms();
      return rep;
    }
  }
  throw InternalError("transfer witness: no (M, m) found; contradicts the transfer argument");
}

ViolationCensus phi_embedding_violations(const GroupRef& g, ViolationMode mode,
                                         int lattice_cap) {
  require_p_group(g, "Frattini violation census");
  ViolationCensus census;
  census.mode = mode;
  census.lattice = all_subgroups(g, lattice_cap);
  const auto& nodes = census.lattice.nodes;

  std::vector<Subgroup> frattinis;
  frattinis.reserve(nodes.size());
  for (const Subgroup& s : nodes) frattinis.push_back(frattini(s));

  if (mode == ViolationMode::Pointwise) {
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].is_whole()) continue;  // no x exists outside G
      for (int x = 0; x < g->order(); ++x) {
        if (nodes[i].contains(x)) continue;
        ++census.examined;
        if (frattinis[i].contains(g->power(x, g->prime())))
          census.pointwise.push_back({x, static_cast<int>(i)});
      }
    }
  } else {
    for (size_t i = 0; i < nodes.size(); ++i)
      for (size_t j = 0; j < nodes.size(); ++j) {
        if (i == j) continue;
        ++census.examined;
        if (frattinis[i].subset_of(frattinis[j]) && !nodes[i].subset_of(nodes[j]))
          census.poset.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
  }
  return census;
}

bool has_cp_direct_factor(const Subgroup& h) {
  return abelian_invariants(h).contains(h.parent()->prime());
}

bool has_cp_direct_factor(const GroupRef& g) {
  return has_cp_direct_factor(whole_group(g));
}

}  // namespace pgl
