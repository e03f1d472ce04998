#include "pgl/goursat.hpp"

#include <algorithm>

#include "pgl/errors.hpp"

namespace pgl {

GoursatTuple make_goursat_tuple(Quotient q1, Quotient q2, Homomorphism phi) {
  // Normality of the kernels was enforced when the quotients were built;
  // what remains is the shape of phi.
  if (phi.source != q1.group || phi.target != q2.group)
    throw DomainError("goursat tuple: phi does not map H1/N1 to H2/N2");
  if (phi.find_violation())
    throw DomainError("goursat tuple: phi is not a homomorphism");
  if (!phi.is_bijective())
    throw DomainError("goursat tuple: phi is not bijective");
  return GoursatTuple{std::move(q1), std::move(q2), std::move(phi)};
}

Subgroup goursat_build(const ProductGroup& p, const GoursatTuple& t) {
  if (t.h1().parent() != p.left || t.h2().parent() != p.right)
    throw DomainError("goursat build: tuple does not live in this product");
  std::vector<int> elems;
  for (int a : t.h1().elements()) {
    int want = t.phi.image[t.q1.coset_of[a]];
    for (int b : t.h2().elements())
      if (t.q2.coset_of[b] == want) elems.push_back(p.pair_index(a, b));
  }
  std::sort(elems.begin(), elems.end());
  long long expected = static_cast<long long>(t.n2().order()) * t.h1().order();
  if (static_cast<long long>(elems.size()) != expected)
    throw InternalError("goursat build: |K| != |N2| |H1|");
  return Subgroup::from_elements(p.group, elems,
                                 reduce_generators(p.group, elems));
}

GoursatTuple goursat_decompose(const ProductGroup& p, const Subgroup& k) {
  if (k.parent() != p.group)
    throw DomainError("goursat decompose: subgroup not in this product");
  std::vector<char> in_k(p.group->order(), 0);
  for (int e : k.elements()) in_k[e] = 1;

  std::vector<char> h1m(p.left->order(), 0), h2m(p.right->order(), 0);
  std::vector<int> h1e, h2e, n1e, n2e;
  for (int e : k.elements()) {
    auto [a, b] = p.split(e);
    if (!h1m[a]) {
      h1m[a] = 1;
      h1e.push_back(a);
    }
    if (!h2m[b]) {
      h2m[b] = 1;
      h2e.push_back(b);
    }
    if (b == ConcreteGroup::identity) n1e.push_back(a);
    if (a == ConcreteGroup::identity) n2e.push_back(b);
  }
  std::sort(h1e.begin(), h1e.end());
  std::sort(h2e.begin(), h2e.end());
  std::sort(n1e.begin(), n1e.end());
  std::sort(n2e.begin(), n2e.end());

  Subgroup h1 = Subgroup::from_elements(p.left, h1e, reduce_generators(p.left, h1e));
  Subgroup n1 = Subgroup::from_elements(p.left, n1e, reduce_generators(p.left, n1e));
  Subgroup h2 = Subgroup::from_elements(p.right, h2e, reduce_generators(p.right, h2e));
  Subgroup n2 = Subgroup::from_elements(p.right, n2e, reduce_generators(p.right, n2e));

  Quotient q1 = quotient(h1, n1);
  Quotient q2 = quotient(h2, n2);

  // phi(aN1) = bN2 for any (a, b) in K; use the canonical coset reps.
  Homomorphism phi{q1.group, q2.group,
                   std::vector<int>(q1.group->order(), -1)};
  for (int c = 0; c < q1.group->order(); ++c) {
    int a = q1.reps[c];
    for (int b : h2.elements())
      if (in_k[p.pair_index(a, b)]) {
        phi.image[c] = q2.coset_of[b];
        break;
      }
    if (phi.image[c] < 0)
      throw InternalError("goursat decompose: K does not project onto H1");
  }
  phi.require_valid("goursat decompose: induced phi");
  if (!phi.is_bijective())
    throw InternalError("goursat decompose: induced phi is not bijective");
  return GoursatTuple{std::move(q1), std::move(q2), std::move(phi)};
}

bool tuples_equal(const GoursatTuple& a, const GoursatTuple& b) {
  if (!a.h1().same_elements(b.h1()) || !a.n1().same_elements(b.n1()) ||
      !a.h2().same_elements(b.h2()) || !a.n2().same_elements(b.n2()))
    return false;
  // Same subgroups give the same canonical quotient numbering, so the maps
  // compare entrywise.
  return a.phi.image == b.phi.image;
}

std::vector<QuotientPair> quotient_pairs(const SubgroupLattice& l) {
  std::vector<QuotientPair> out;
  for (int h = 0; h < l.node_count(); ++h)
    for (int n = 0; n < l.node_count(); ++n) {
      if (!l.contains(n, h)) continue;
      if (!is_normal_in(l.nodes[n], l.nodes[h])) continue;
      out.push_back({h, n, quotient(l.nodes[h], l.nodes[n])});
    }
  return out;
}

GoursatCensus goursat_census(const GroupRef& g1, const GroupRef& g2,
                             int lattice_cap) {
  ProductGroup p = direct_product(g1, g2, lattice_cap);
  SubgroupLattice lp = all_subgroups(p.group, lattice_cap);
  SubgroupLattice l1 = all_subgroups(g1, lattice_cap);
  SubgroupLattice l2 = all_subgroups(g2, lattice_cap);

  GoursatCensus census;
  census.order1 = g1->order();
  census.order2 = g2->order();
  census.subgroup_count = lp.node_count();

  std::vector<QuotientPair> pairs1 = quotient_pairs(l1);
  std::vector<QuotientPair> pairs2 = quotient_pairs(l2);
  for (const QuotientPair& a : pairs1)
    for (const QuotientPair& b : pairs2) {
      if (a.q.group->order() != b.q.group->order()) continue;
      census.tuple_count += count_isomorphisms(a.q.group, b.q.group);
    }

  for (int i = 0; i < lp.node_count(); ++i) {
    GoursatTuple t = goursat_decompose(p, lp.nodes[i]);
    Subgroup back = goursat_build(p, t);
    if (!back.same_elements(lp.nodes[i]))
      census.roundtrip_failures.push_back(
          "subgroup #" + std::to_string(i) + " of order " +
          std::to_string(lp.nodes[i].order()) + " does not round-trip");
  }
  return census;
}

Lemma32Report lemma32_generators(const ProductGroup& p, const GoursatTuple& t) {
  Subgroup k = goursat_build(p, t);
  std::vector<char> in_k(p.group->order(), 0);
  for (int e : k.elements()) in_k[e] = 1;

  Lemma32Report rep;
  rep.k_order = k.order();
  for (int a : minimal_generators(t.h1())) {
    int lift = -1;
    for (int b : t.h2().elements())
      if (in_k[p.pair_index(a, b)]) {
        lift = p.pair_index(a, b);
        break;
      }
    if (lift < 0) throw InternalError("lemma32: generator of H1 has no lift");
    rep.generating_set.push_back(lift);
  }
  for (int y : minimal_generators(t.n2()))
    rep.generating_set.push_back(p.pair_index(ConcreteGroup::identity, y));

  rep.closure_matches =
      closure(p.group, rep.generating_set).same_elements(k);

  Subgroup phi_k = frattini(k);
  Subgroup h2n2 = commutator_subgroup(t.h2(), t.n2());
  rep.frattini_contains = true;
  for (int c : h2n2.elements())
    if (!phi_k.contains(p.pair_index(ConcreteGroup::identity, c))) {
      rep.frattini_contains = false;
      break;
    }
  return rep;
}

Lemma34Report lemma34_verify(const ProductGroup& p, const GoursatTuple& t) {
  if (!is_abelian(t.h2()))
    throw DomainError("lemma34 requires an abelian H2");
  Subgroup k = goursat_build(p, t);
  Lemma34Report rep;

  Subgroup kk = commutator_subgroup(k, k);
  Subgroup h1h1 = commutator_subgroup(t.h1(), t.h1());
  std::vector<int> left;
  for (int c : h1h1.elements())
    left.push_back(p.pair_index(c, ConcreteGroup::identity));
  std::sort(left.begin(), left.end());
  rep.commutator_equals_left = kk.elements() == left;

  Quotient kab = abelianization(k);

  // alpha: N2 -> K^ab, n |-> (1, n)[K, K]
  Quotient n2m = materialize(t.n2());
  Homomorphism alpha{n2m.group, kab.group, std::vector<int>(n2m.group->order())};
  for (int i = 0; i < n2m.group->order(); ++i)
    alpha.image[i] = kab.map(p.pair_index(ConcreteGroup::identity, n2m.reps[i]));
  alpha.require_valid("lemma34 alpha");
  rep.alpha_injective = alpha.is_injective();

  // beta: K^ab -> H1^ab, (h1, h2)[K, K] |-> h1[H1, H1]
  Quotient h1ab = abelianization(t.h1());
  Homomorphism beta{kab.group, h1ab.group, std::vector<int>(kab.group->order())};
  for (int c = 0; c < kab.group->order(); ++c)
    beta.image[c] = h1ab.map(p.split(kab.reps[c]).first);
  beta.require_valid("lemma34 beta");
  rep.beta_surjective = beta.is_surjective();
  rep.beta_well_defined = true;
  for (int e : k.elements())
    if (beta.image[kab.map(e)] != h1ab.map(p.split(e).first)) {
      rep.beta_well_defined = false;
      break;
    }

  std::vector<int> im_alpha = alpha.image;
  std::sort(im_alpha.begin(), im_alpha.end());
  im_alpha.erase(std::unique(im_alpha.begin(), im_alpha.end()), im_alpha.end());
  rep.exact_at_middle = im_alpha == beta.kernel().elements();

  rep.kab_invariants = abelian_invariants(kab.group);
  rep.n2_invariants = abelian_invariants(n2m.group);
  rep.h1ab_invariants = abelian_invariants(h1ab.group);
  rep.split_consistent =
      rep.kab_invariants == direct_sum(rep.n2_invariants, rep.h1ab_invariants);
  return rep;
}

TupleSampler::TupleSampler(const GroupRef& g1, const GroupRef& g2, int lattice_cap)
    : product_(direct_product(g1, g2, lattice_cap)) {
  pairs1_ = quotient_pairs(all_subgroups(g1, lattice_cap));
  pairs2_ = quotient_pairs(all_subgroups(g2, lattice_cap));
  for (size_t i = 0; i < pairs2_.size(); ++i)
    if (is_abelian(pairs2_[i].q.domain))
      abelian_pairs2_.push_back(static_cast<int>(i));
}

GoursatTuple TupleSampler::sample(std::mt19937_64& rng, bool require_abelian_h2) {
  // Plain modulo keeps draws reproducible across standard library versions.
  auto draw = [&rng](size_t n) { return static_cast<size_t>(rng() % n); };
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const QuotientPair& b =
        require_abelian_h2 ? pairs2_[abelian_pairs2_[draw(abelian_pairs2_.size())]]
                           : pairs2_[draw(pairs2_.size())];
    std::vector<const QuotientPair*> matching;
    for (const QuotientPair& a : pairs1_)
      if (a.q.group->order() == b.q.group->order()) matching.push_back(&a);
    if (matching.empty()) continue;
    const QuotientPair& a = *matching[draw(matching.size())];
    std::vector<Homomorphism> isos = all_isomorphisms(a.q.group, b.q.group);
    if (isos.empty()) continue;
    return make_goursat_tuple(a.q, b.q, isos[draw(isos.size())]);
  }
  throw InternalError("tuple sampling failed to find a valid tuple");
}

}  // namespace pgl
