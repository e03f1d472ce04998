#include "doctest.h"
#include "pgl/enumerate.hpp"
#include "pgl/errors.hpp"
#include "pgl/goursat.hpp"

using namespace pgl;

namespace {

GroupRef enumerate_text(const std::string& text) {
  return enumerate(parse_presentation(text));
}

GroupRef c(int n, int p) { return cyclic_group(n, p); }
GroupRef q8() { return enumerate_text("gens: x, y; rels: x^4, y^2 x^-2, y^-1 x y x"); }
GroupRef d4() { return enumerate_text("gens: r, s; rels: r^4, s^2, (r s)^2"); }

// The (Q8, <j>, C4, C2, phi) tuple from the worked examples.
struct Q8C4 {
  GroupRef g1 = q8();
  GroupRef g2 = c(4, 2);
  ProductGroup p = direct_product(g1, g2);
  GoursatTuple t = make_tuple_();

  GoursatTuple make_tuple_() {
    int j = g1->generator_elements()[1];
    Quotient q1 = quotient(whole_group(g1), closure(g1, std::vector<int>{j}));
    Quotient q2 = quotient(whole_group(g2), power_subgroup(whole_group(g2), 2));
    auto iso = find_isomorphism(q1.group, q2.group);
    if (!iso) throw Error("fixture: no isomorphism between the C2 quotients");
    return make_goursat_tuple(q1, q2, *iso);
  }
};

// Entrywise-identity map between two materializations of the same subgroup;
// valid because the quotient construction is canonical.
Homomorphism matching_identity(const Quotient& q1, const Quotient& q2) {
  Homomorphism h{q1.group, q2.group, std::vector<int>(q1.group->order())};
  for (int i = 0; i < q1.group->order(); ++i) h.image[i] = i;
  h.require_valid("matching identity");
  return h;
}

}  // namespace

TEST_SUITE_BEGIN("goursat");

TEST_CASE("direct products") {
  ProductGroup v4 = direct_product(c(2, 2), c(2, 2));
  CHECK(v4.group->order() == 4);
  CHECK(v4.group->exponent() == 2);

  GroupRef h3 = enumerate_text("gens: x, y; rels: x^3, y^3, [x,y,x], [x,y,y]");
  CHECK(direct_product(h3, c(3, 3)).group->order() == 81);

  ProductGroup qc = direct_product(q8(), c(2, 2));
  CHECK(qc.group->order() == 16);
  CHECK(center(qc.group).order() == 4);

  CHECK_THROWS_AS(direct_product(c(2, 2), c(3, 3)), DomainError);
  CHECK_THROWS_AS(direct_product(c(64, 2), c(128, 2), 4096), LimitError);
}

TEST_CASE("embeddings and projections compose as expected") {
  ProductGroup p = direct_product(d4(), c(4, 2));
  Homomorphism back = compose(p.proj_left, p.embed_left);
  CHECK(back.image == identity_hom(p.left).image);
  Homomorphism cross = compose(p.proj_right, p.embed_left);
  CHECK(cross.image_subgroup().is_trivial());
  for (int a = 0; a < p.left->order(); ++a)
    for (int b = 0; b < p.right->order(); ++b) {
      int k = p.pair_index(a, b);
      CHECK(p.proj_left.image[k] == a);
      CHECK(p.proj_right.image[k] == b);
    }
}

TEST_CASE("building the diagonal of C2 x C2") {
  GroupRef g = c(2, 2);
  ProductGroup p = direct_product(g, g);
  Quotient q1 = materialize(whole_group(g));
  Quotient q2 = materialize(whole_group(g));
  GoursatTuple t = make_goursat_tuple(q1, q2, matching_identity(q1, q2));
  Subgroup k = goursat_build(p, t);
  CHECK(k.order() == 2);
  CHECK(k.contains(p.pair_index(1, 1)));
}

TEST_CASE("the Q8 x C4 worked example") {
  Q8C4 f;
  Subgroup k = goursat_build(f.p, f.t);
  CHECK(k.order() == 16);  // |N2| |H1| = 2 * 8

  // exact sequence invariants
  CHECK(k.order() == f.t.n1().order() * f.t.h2().order());

  // |K / (N1 x N2)| = |H1 / N1|
  std::vector<int> n1n2;
  for (int a : f.t.n1().elements())
    for (int b : f.t.n2().elements()) n1n2.push_back(f.p.pair_index(a, b));
  std::sort(n1n2.begin(), n1n2.end());
  Subgroup inner = Subgroup::from_elements(f.p.group, n1n2,
                                           reduce_generators(f.p.group, n1n2));
  CHECK(k.order() / inner.order() == f.t.q1.group->order());

  // K projects onto H1 and H2
  std::vector<char> h1cover(f.g1->order(), 0), h2cover(f.g2->order(), 0);
  for (int e : k.elements()) {
    auto [a, b] = f.p.split(e);
    h1cover[a] = 1;
    h2cover[b] = 1;
  }
  for (int a : f.t.h1().elements()) CHECK(h1cover[a]);
  for (int b : f.t.h2().elements()) CHECK(h2cover[b]);
}

TEST_CASE("decompose: canonical subgroups of a product") {
  GroupRef g1 = c(4, 2), g2 = c(4, 2);
  ProductGroup p = direct_product(g1, g2);

  GoursatTuple whole = goursat_decompose(p, whole_group(p.group));
  CHECK(whole.h1().is_whole());
  CHECK(whole.n1().is_whole());
  CHECK(whole.h2().is_whole());
  CHECK(whole.n2().is_whole());
  CHECK(whole.q1.group->order() == 1);

  GoursatTuple left = goursat_decompose(p, p.embed_left.image_subgroup());
  CHECK(left.h1().is_whole());
  CHECK(left.n1().is_whole());
  CHECK(left.h2().is_trivial());
  CHECK(left.n2().is_trivial());

  std::vector<int> diag;
  for (int a = 0; a < 4; ++a) diag.push_back(p.pair_index(a, a));
  std::sort(diag.begin(), diag.end());
  GoursatTuple dt = goursat_decompose(
      p, Subgroup::from_elements(p.group, diag, reduce_generators(p.group, diag)));
  CHECK(dt.h1().is_whole());
  CHECK(dt.n1().is_trivial());
  CHECK(dt.h2().is_whole());
  CHECK(dt.n2().is_trivial());
  CHECK(dt.phi.is_bijective());  // an automorphism of C4
}

TEST_CASE("round-trips both ways on a nonabelian product") {
  Q8C4 f;
  SubgroupLattice lat = all_subgroups(f.p.group);
  for (const Subgroup& k : lat.nodes) {
    GoursatTuple t = goursat_decompose(f.p, k);
    CHECK(goursat_build(f.p, t).same_elements(k));
    CHECK(static_cast<long long>(k.order()) ==
          static_cast<long long>(t.n2().order()) * t.h1().order());
    CHECK(static_cast<long long>(k.order()) ==
          static_cast<long long>(t.n1().order()) * t.h2().order());
  }

  // decompose(build(t)) = t on sampled tuples
  TupleSampler sampler(f.g1, f.g2);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 40; ++i) {
    GoursatTuple t = sampler.sample(rng, false);
    GoursatTuple back = goursat_decompose(f.p, goursat_build(f.p, t));
    CHECK(tuples_equal(t, back));
  }
}

TEST_CASE("census counts: subgroups = 5-tuples") {
  GoursatCensus a = goursat_census(c(2, 2), c(2, 2));
  CHECK(a.subgroup_count == 5);
  CHECK(a.tuple_count == 5);
  CHECK(a.roundtrip_failures.empty());

  GoursatCensus b = goursat_census(c(2, 2), c(4, 2));
  CHECK(b.subgroup_count == 8);
  CHECK(b.tuple_count == 8);

  GoursatCensus d = goursat_census(c(3, 3), c(3, 3));
  CHECK(d.subgroup_count == 6);  // p + 3 for p = 3
  CHECK(d.tuple_count == 6);

  GoursatCensus e = goursat_census(q8(), c(4, 2));
  CHECK(e.ok());

  // swapping the factors swaps nothing but the labels
  GoursatCensus f = goursat_census(c(4, 2), c(2, 2));
  CHECK(f.subgroup_count == b.subgroup_count);
  CHECK(f.tuple_count == b.tuple_count);
}

TEST_CASE("lemma32 generating sets") {
  Q8C4 f;
  Lemma32Report rep = lemma32_generators(f.p, f.t);
  CHECK(rep.closure_matches);
  CHECK(rep.frattini_contains);
  CHECK(rep.generating_set.size() <= 3);  // d(Q8) + one normal generator of N2

  // N2 = 1: only the lifted H1 generators are needed
  GroupRef g = d4();
  ProductGroup p = direct_product(g, g);
  Quotient q1 = materialize(whole_group(g));
  Quotient q2 = materialize(whole_group(g));
  GoursatTuple diag = make_goursat_tuple(q1, q2, matching_identity(q1, q2));
  Lemma32Report rep2 = lemma32_generators(p, diag);
  CHECK(rep2.closure_matches);
  CHECK(rep2.generating_set.size() == minimal_generators(whole_group(g)).size());

  // nonabelian H2 with N2 = H2: [H2, N2] = {1, -1} really lands in Phi(K)
  GroupRef q = q8();
  ProductGroup pq = direct_product(q, q);
  Quotient t1 = quotient(whole_group(q), whole_group(q));
  Quotient t2 = quotient(whole_group(q), whole_group(q));
  GoursatTuple whole_tuple = make_goursat_tuple(t1, t2, matching_identity(t1, t2));
  CHECK_FALSE(commutator_subgroup(whole_tuple.h2(), whole_tuple.n2()).is_trivial());
  Lemma32Report rep3 = lemma32_generators(pq, whole_tuple);
  CHECK(rep3.closure_matches);
  CHECK(rep3.frattini_contains);
  CHECK(goursat_build(pq, whole_tuple).is_whole());
}

TEST_CASE("lemma34 commutator identity and exact sequence") {
  Q8C4 f;
  Lemma34Report rep = lemma34_verify(f.p, f.t);
  CHECK(rep.ok());
  CHECK(rep.commutator_equals_left);

  // [K, K] = {1, -1} x {1}
  Subgroup k = goursat_build(f.p, f.t);
  Subgroup kk = commutator_subgroup(k, k);
  CHECK(kk.order() == 2);

  // abelian H1 too: both sides trivial
  ProductGroup pa = direct_product(c(4, 2), c(4, 2));
  GoursatTuple ta = goursat_decompose(pa, whole_group(pa.group));
  Lemma34Report repa = lemma34_verify(pa, ta);
  CHECK(repa.ok());
  CHECK(repa.split_consistent);

  // the finite analog of the non-split example: K^ab = C9 vs C3 x C3
  GroupRef g1 = c(3, 3), g2 = c(9, 3);
  ProductGroup p = direct_product(g1, g2);
  Quotient q1 = materialize(whole_group(g1));
  Quotient q2 = quotient(whole_group(g2), power_subgroup(whole_group(g2), 3));
  auto iso = find_isomorphism(q1.group, q2.group);
  REQUIRE(iso);
  GoursatTuple t = make_goursat_tuple(q1, q2, *iso);
  Subgroup k9 = goursat_build(p, t);
  CHECK(k9.order() == 9);
  bool cyclic = false;
  for (int e : k9.elements())
    if (p.group->element_order(e) == 9) cyclic = true;
  CHECK(cyclic);
  Lemma34Report rep9 = lemma34_verify(p, t);
  CHECK(rep9.ok());
  CHECK_FALSE(rep9.split_consistent);
  CHECK(rep9.kab_invariants.divisors == std::vector<long long>{9});
  CHECK(direct_sum(rep9.n2_invariants, rep9.h1ab_invariants).divisors ==
        std::vector<long long>{3, 3});

  // H2 must be abelian
  ProductGroup pq = direct_product(q8(), q8());
  GoursatTuple tq = goursat_decompose(pq, whole_group(pq.group));
  CHECK_THROWS_AS(lemma34_verify(pq, tq), DomainError);
}

TEST_CASE("sampler is deterministic under a fixed seed") {
  TupleSampler sampler(d4(), c(4, 2));
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 10; ++i)
    CHECK(tuples_equal(sampler.sample(a, true), sampler.sample(b, true)));
}

TEST_SUITE_END();
