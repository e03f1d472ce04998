// Acceptance suite: one verdict line per criterion, nonzero exit when any
// criterion fails. Criteria are pinned here, including their tolerances
// (all exact) and time budgets.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>

#include "oracles.hpp"
#include "pgl/corpus.hpp"
#include "pgl/errors.hpp"
#include "pgl/resistance.hpp"

using namespace pgl;

namespace {

struct Check {
  std::string name;
  double budget_seconds;
  std::function<void()> run;  // throws on failure
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(what);
}

std::vector<int> all_primes{2, 3, 5};

const std::vector<CorpusEntry>& corpus_for(int p) {
  static std::map<int, std::vector<CorpusEntry>> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, builtin_corpus(p)).first;
  return it->second;
}

// -------------------------------------------------------------- criteria

void criterion_reference_orders() {
  for (int p : {3, 5}) {
    GroupRef r = reference_group(p);
    require(r->order() == p * p * p,
            "reference group for p=" + std::to_string(p) + " has wrong order");
  }
  GroupRef r2 = reference_group(2);
  require(r2->order() == 32, "reference group for p=2 has wrong order");
  require(abelian_invariants(r2).divisors == std::vector<long long>{4, 4},
          "reference group for p=2 has wrong abelian invariants");
}

void criterion_frattini_dual() {
  for (int p : all_primes)
    for (const CorpusEntry& e : corpus_for(p)) {
      require(e.group->order() <= 128, "catalog entry exceeds order 128");
      SubgroupLattice lat = all_subgroups(e.group);
      for (const Subgroup& h : lat.nodes) {
        std::vector<int> meet = h.elements();
        for (const Subgroup& s : lat.nodes) {
          if (s.order() * p != h.order() || !s.subset_of(h)) continue;
          std::vector<int> next;
          std::set_intersection(meet.begin(), meet.end(), s.elements().begin(),
                                s.elements().end(), std::back_inserter(next));
          meet = std::move(next);
        }
        require(frattini(h).elements() == meet,
                e.name + ": H^p[H,H] != intersection of maximal subgroups");
      }
    }
}

void criterion_goursat_bijection() {
  for (int p : all_primes) {
    const auto& corpus = corpus_for(p);
    for (size_t i = 0; i < corpus.size(); ++i)
      for (size_t j = i; j < corpus.size(); ++j) {
        long long prod = static_cast<long long>(corpus[i].group->order()) *
                         corpus[j].group->order();
        if (prod > 256) continue;
        auto start = std::chrono::steady_clock::now();
        GoursatCensus c = goursat_census(corpus[i].group, corpus[j].group);
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        require(c.subgroup_count == c.tuple_count,
                corpus[i].name + " x " + corpus[j].name + ": " +
                    std::to_string(c.subgroup_count) + " subgroups vs " +
                    std::to_string(c.tuple_count) + " tuples");
        require(c.roundtrip_failures.empty(),
                corpus[i].name + " x " + corpus[j].name + ": round-trip failures");
        require(secs < 120.0,
                corpus[i].name + " x " + corpus[j].name + ": census too slow");
      }
  }
}

void criterion_lemma34_random_tuples() {
  int checked = 0;
  for (int p : {2, 3}) {
    const auto& corpus = corpus_for(p);
    std::vector<std::pair<GroupRef, GroupRef>> pairs;
    for (size_t i = 0; i < corpus.size(); ++i)
      for (size_t j = i; j < corpus.size(); ++j)
        if (static_cast<long long>(corpus[i].group->order()) *
                corpus[j].group->order() <=
            256)
          pairs.emplace_back(corpus[i].group, corpus[j].group);
    std::mt19937_64 rng(0);
    for (int k = 0; k < 30; ++k) {
      auto& [g1, g2] = pairs[rng() % pairs.size()];
      TupleSampler sampler(g1, g2);
      GoursatTuple t = sampler.sample(rng, true);
      Lemma34Report rep = lemma34_verify(sampler.product(), t);
      require(rep.commutator_equals_left,
              "[K,K] != [H1,H1] x 1 on a sampled tuple");
      require(rep.alpha_injective && rep.beta_surjective &&
                  rep.beta_well_defined && rep.exact_at_middle,
              "exact sequence check failed on a sampled tuple");
      ++checked;
    }
  }
  require(checked >= 50, "fewer than 50 tuples sampled");
}

void criterion_lemma_isomorphism() {
  for (int p : all_primes) {
    for (const CorpusEntry& e : corpus_for(p)) {
      LemmaIsoOutcome out = lemma_iso_check(e.group);
      bool eligible = e.tags.rank == 2 && !e.tags.powerful &&
                      !(p == 2 && abelian_invariants(e.group).contains(2));
      if (eligible) {
        require(out.status == LemmaIsoOutcome::Status::Isomorphic,
                e.name + ": eligible but no isomorphism to the reference group");
      } else {
        require(out.status == LemmaIsoOutcome::Status::Skipped,
                e.name + ": expected a skip");
      }
      if (e.name.rfind("ES", 0) == 0)  // the powerful negative control
        require(out.skip_reason == "powerful",
                e.name + ": expected the 'powerful' skip reason");
    }
  }
}

void criterion_commutator_identities() {
  for (int p : all_primes)
    for (const CorpusEntry& e : corpus_for(p)) {
      IdentityCheckReport rep = commutator_identity_check(e.group);
      require(rep.ok(), e.name + ": commutator identity counterexample");
      require(rep.pairs_checked ==
                  static_cast<long long>(rep.quotient_order) * rep.quotient_order,
              e.name + ": incomplete pair coverage");
    }
}

void criterion_witness_scenarios() {
  GroupRef heis = corpus_entry(corpus_for(3), "Heis3").group;
  auto gens = [](const GroupRef& g) {
    return std::pair{g->generator_elements()[0], g->generator_elements()[1]};
  };
  WitnessReport w1 = theorem_witness(heis, gens(heis), heis, gens(heis));
  require(w1.all_hold(), "theorem witness failed on (Heis3, Heis3)");

  GroupRef r2 = corpus_entry(corpus_for(2), "R2").group;
  WitnessReport w2 = theorem_witness(r2, gens(r2), r2, gens(r2));
  require(w2.all_hold(), "theorem witness failed on (R2, R2)");
  require(w2.claim("w^2 in K").holds && w2.claim("w^4 in [K, K]").holds,
          "p=2 witness claims missing");

  GroupRef q8 = corpus_entry(corpus_for(2), "Q8").group;
  int i = q8->generator_elements()[0];
  WitnessReport w3 = torsion_witness(q8, i, 1, 1);
  require(w3.all_hold(), "torsion witness failed on (Q8, i, 1, 1)");
  require(!w3.claim("w^p in [K, K]").degenerate,
          "torsion witness on Q8 should be nondegenerate");

  WitnessReport w4 = transfer_witness(q8, i);
  require(w4.all_hold(), "transfer witness failed on (Q8, i)");
}

void criterion_engine_soundness() {
  for (int p : all_primes)
    for (const CorpusEntry& e : corpus_for(p)) {
      ValidationReport v = e.group->validate();
      require(v.ok, e.name + ": " + v.failure);
      for (int a = 0; a < e.group->order(); ++a)
        require(e.group->order() % e.group->element_order(a) == 0,
                e.name + ": Lagrange violation");
      SubgroupLattice lat = all_subgroups(e.group);
      for (const Subgroup& h : lat.nodes) {
        long long quot = h.order() / frattini(h).order();
        int d = 0;
        while (quot > 1) {
          quot /= p;
          ++d;
        }
        require(static_cast<int>(minimal_generators(h).size()) == d,
                e.name + ": Burnside basis size mismatch");
      }
    }

  GroupRef d4 = corpus_entry(corpus_for(2), "D4").group;
  GroupRef q8 = corpus_entry(corpus_for(2), "Q8").group;
  require(all_subgroups(d4).node_count() == 10, "D4 must have 10 subgroups");
  require(all_subgroups(q8).node_count() == 6, "Q8 must have 6 subgroups");
  require(oracle::all_subgroups(d4).size() == 10, "oracle: D4 subgroup count");
  require(oracle::all_subgroups(q8).size() == 6, "oracle: Q8 subgroup count");
  // lattice vs oracle on every builtin group of order <= 64
  for (int p : all_primes)
    for (const CorpusEntry& e : corpus_for(p)) {
      if (e.group->order() > 64) continue;
      auto ref = oracle::all_subgroups(e.group);
      SubgroupLattice lat = all_subgroups(e.group);
      require(lat.node_count() == static_cast<int>(ref.size()),
              e.name + ": subgroup count disagrees with the oracle");
      for (const Subgroup& s : lat.nodes)
        require(ref.count(s.elements()) == 1,
                e.name + ": lattice node missing from the oracle");
    }
}

}  // namespace

int main() {
  std::vector<Check> checks = {
      {"1 reference orders and invariants", 5.0, criterion_reference_orders},
      {"2 Frattini dual characterization", 60.0, criterion_frattini_dual},
      {"3 Goursat bijection on builtin products", 7200.0, criterion_goursat_bijection},
      {"4 lemma34 properties on seeded random tuples", 300.0, criterion_lemma34_random_tuples},
      {"5 class-3 quotient isomorphisms", 300.0, criterion_lemma_isomorphism},
      {"6 commutator identities mod gamma_4", 60.0, criterion_commutator_identities},
      {"7 witness scenarios", 60.0, criterion_witness_scenarios},
      {"8 engine soundness", 300.0, criterion_engine_soundness},
  };

  int failed = 0;
  for (const Check& c : checks) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = secs < c.budget_seconds;
    bool pass = error.empty() && in_budget;
    if (!pass) ++failed;
    std::printf("%s  criterion %s  (%.2fs)%s%s\n", pass ? "PASS" : "FAIL",
                c.name.c_str(), secs, error.empty() ? "" : ("  " + error).c_str(),
                !in_budget && error.empty() ? "  over time budget" : "");
  }
  if (failed) std::printf("%d criterion(s) failed\n", failed);
  return failed == 0 ? 0 : 1;
}
