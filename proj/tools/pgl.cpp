// pgl: build, analyze and verify small p-groups from presentations.
//
// Subcommands mirror the scenario suites: `build`, `analyze`, `lattice`,
// `goursat-census`, `scenario <name>`, `corpus list`. Reports go to stdout
// as text or, with --json, as a single JSON envelope
//   {tool_version, command, inputs, results, failures, elapsed_ms}
// Exit status: 0 when every verified claim holds, 1 when any verification
// fails, 2 on usage or input errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pgl/corpus.hpp"
#include "pgl/errors.hpp"
#include "pgl/resistance.hpp"
#include "pgl/version.hpp"

using json = nlohmann::ordered_json;
using namespace pgl;

namespace {

struct Options {
  bool json_output = false;
  int prime = 0;  // 0: per-command default
  unsigned long long seed = 0;
  int max_cosets = 200000;
  int max_order = 4096;
  int lattice_cap = 512;
  int count = 0;  // sample count; 0: per-command default

  EnumerateOptions enumerate_options() const {
    return EnumerateOptions{max_cosets, max_order};
  }
};

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::vector<std::string> failures;
  std::ostringstream text;

  void fail(const std::string& what) { failures.push_back(what); }
};

GroupRef load_group_file(const std::string& path, const Options& opt) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  GroupRef g = enumerate(parse_presentation(buf.str()), opt.enumerate_options());
  // carry the filename stem as a display name
  ConcreteGroup::Data d;
  d.order = g->order();
  d.mul.reserve(static_cast<size_t>(d.order) * d.order);
  for (int a = 0; a < d.order; ++a)
    for (int b = 0; b < d.order; ++b) d.mul.push_back(g->mul(a, b));
  d.generators = g->generator_elements();
  d.prime = g->prime();
  d.element_words = g->element_words();
  d.generator_names = g->generator_names();
  d.name = std::filesystem::path(path).stem().string();
  return ConcreteGroup::create(std::move(d));
}

int element_from_word(const GroupRef& g, const std::string& word_text) {
  Word w = parse_word(word_text, g->generator_names());
  return g->evaluate(w);
}

json tags_json(const CorpusTags& t) {
  return json{{"abelian", t.abelian},
              {"powerful", t.powerful},
              {"d", t.rank},
              {"class", t.nilpotency_class}};
}

json invariants_json(const AbelianInvariants& inv) {
  return json(inv.divisors);
}

json witness_json(const WitnessReport& rep) {
  json claims = json::array();
  for (const Claim& c : rep.claims)
    claims.push_back({{"text", c.text}, {"holds", c.holds}, {"degenerate", c.degenerate}});
  json inputs = json::object();
  for (const auto& [k, v] : rep.inputs) inputs[k] = v;
  return json{{"scenario", rep.scenario},
              {"inputs", inputs},
              {"claims", claims},
              {"elapsed_ms", rep.elapsed_ms}};
}

json census_json(const GoursatCensus& c) {
  return json{{"order1", c.order1},
              {"order2", c.order2},
              {"subgroup_count", c.subgroup_count},
              {"tuple_count", c.tuple_count},
              {"roundtrip_failures", c.roundtrip_failures}};
}

void collect_witness(Report& rep, const WitnessReport& w) {
  rep.results["witnesses"].push_back(witness_json(w));
  for (const Claim& c : w.claims) {
    rep.text << "  " << (c.holds ? "ok  " : "FAIL") << "  " << c.text
             << (c.degenerate ? "  (degenerate)" : "") << "\n";
    if (!c.holds) rep.fail(w.scenario + ": " + c.text);
  }
}

// ---------------------------------------------------------------- commands

void run_build(Report& rep, const std::string& file, const Options& opt) {
  GroupRef g = load_group_file(file, opt);
  rep.results = {{"file", file},
                 {"order", g->order()},
                 {"prime", g->prime()},
                 {"p_group", g->is_p_group()},
                 {"generators", json::array()}};
  for (int e : g->generator_elements())
    rep.results["generators"].push_back(
        {{"element", e}, {"order", g->element_order(e)}});
  rep.text << g->name() << ": order " << g->order() << ", p = " << g->prime()
           << (g->is_p_group() ? "" : " (not a p-group)") << "\n";
}

void run_analyze(Report& rep, const std::string& file, const Options& opt) {
  GroupRef g = load_group_file(file, opt);
  Subgroup whole = whole_group(g);
  rep.results = {{"file", file},
                 {"order", g->order()},
                 {"prime", g->prime()},
                 {"p_group", g->is_p_group()},
                 {"exponent", g->exponent()},
                 {"center_order", center(g).order()}};
  rep.text << g->name() << ": order " << g->order() << ", exponent "
           << g->exponent() << "\n";
  if (g->is_p_group()) {
    CorpusTags t = compute_tags(g);
    rep.results["abelian"] = t.abelian;
    rep.results["powerful"] = t.powerful;
    rep.results["d"] = t.rank;
    rep.results["class"] = t.nilpotency_class;
    rep.results["abelian_invariants"] = invariants_json(abelian_invariants(whole));
    json lc = json::array();
    for (const Subgroup& s : lower_central_series(whole)) lc.push_back(s.order());
    rep.results["lower_central_orders"] = lc;
    rep.results["frattini_order"] = frattini(whole).order();
    rep.text << "  abelian: " << (t.abelian ? "yes" : "no")
             << ", powerful: " << (t.powerful ? "yes" : "no") << ", d = " << t.rank
             << ", class = " << t.nilpotency_class << "\n"
             << "  H^ab invariants " << abelian_invariants(whole).str() << "\n";
  } else {
    rep.text << "  not a p-group; structural report limited\n";
  }
}

void run_lattice(Report& rep, const std::string& file, const Options& opt) {
  GroupRef g = load_group_file(file, opt);
  SubgroupLattice lat = all_subgroups(g, opt.lattice_cap);
  rep.results = {{"file", file},
                 {"order", g->order()},
                 {"subgroup_count", lat.node_count()},
                 {"by_order", json::object()}};
  for (auto [k, v] : lat.count_by_order())
    rep.results["by_order"][std::to_string(k)] = v;
  long long normal = 0;
  Subgroup whole = whole_group(g);
  for (const Subgroup& s : lat.nodes)
    if (is_normal_in(s, whole)) ++normal;
  rep.results["normal_count"] = normal;
  rep.text << g->name() << ": " << lat.node_count() << " subgroups (" << normal
           << " normal)\n";
  for (auto [k, v] : lat.count_by_order())
    rep.text << "  order " << k << ": " << v << "\n";
}

void run_census(Report& rep, const std::string& file1, const std::string& file2,
                const Options& opt) {
  GroupRef g1 = load_group_file(file1, opt);
  GroupRef g2 = load_group_file(file2, opt);
  GoursatCensus c = goursat_census(g1, g2, opt.lattice_cap);
  rep.results = census_json(c);
  rep.text << g1->name() << " x " << g2->name() << ": " << c.subgroup_count
           << " subgroups, " << c.tuple_count << " tuples\n";
  if (c.subgroup_count != c.tuple_count)
    rep.fail("census: subgroup count != tuple count");
  for (const std::string& f : c.roundtrip_failures) rep.fail("census: " + f);
}

// ---------------------------------------------------------------- scenarios

std::vector<GroupRef> scenario_groups(const std::vector<std::string>& files,
                                      int p, const Options& opt) {
  std::vector<GroupRef> out;
  if (!files.empty()) {
    for (const auto& f : files) out.push_back(load_group_file(f, opt));
  } else {
    for (const CorpusEntry& e : builtin_corpus(p, opt.enumerate_options()))
      out.push_back(e.group);
  }
  return out;
}

void run_lemma_iso(Report& rep, const std::vector<std::string>& files, int p,
                   const Options& opt) {
  rep.results["groups"] = json::array();
  for (const GroupRef& g : scenario_groups(files, p, opt)) {
    LemmaIsoOutcome out = lemma_iso_check(g);
    std::string status = out.status == LemmaIsoOutcome::Status::Isomorphic
                             ? "isomorphic"
                             : out.status == LemmaIsoOutcome::Status::Skipped
                                   ? "skipped"
                                   : "FAILED";
    rep.results["groups"].push_back({{"group", g->name()},
                                     {"order", g->order()},
                                     {"status", status},
                                     {"skip_reason", out.skip_reason}});
    rep.text << "  " << g->name() << ": " << status
             << (out.skip_reason.empty() ? "" : " (" + out.skip_reason + ")") << "\n";
    if (out.status == LemmaIsoOutcome::Status::Failed)
      rep.fail(g->name() + ": class-3 quotient not isomorphic to the reference group");
  }
}

// Builtin product pairs whose direct product stays within the cap.
std::vector<std::pair<GroupRef, GroupRef>> builtin_pairs(int p, int product_cap,
                                                         const Options& opt) {
  std::vector<std::pair<GroupRef, GroupRef>> pairs;
  auto corpus = builtin_corpus(p, opt.enumerate_options());
  for (size_t i = 0; i < corpus.size(); ++i)
    for (size_t j = i; j < corpus.size(); ++j)
      if (static_cast<long long>(corpus[i].group->order()) *
              corpus[j].group->order() <=
          product_cap)
        pairs.emplace_back(corpus[i].group, corpus[j].group);
  return pairs;
}

void run_lemma32(Report& rep, int p, const Options& opt) {
  int want = opt.count > 0 ? opt.count : 25;
  std::mt19937_64 rng(opt.seed);
  auto pairs = builtin_pairs(p, std::min(opt.lattice_cap, 256), opt);
  if (pairs.empty()) throw DomainError("no builtin pair fits the cap");
  int done = 0, failures = 0;
  while (done < want) {
    auto& [g1, g2] = pairs[rng() % pairs.size()];
    TupleSampler sampler(g1, g2, opt.lattice_cap);
    GoursatTuple t = sampler.sample(rng, false);
    Lemma32Report r = lemma32_generators(sampler.product(), t);
    if (!r.ok()) {
      ++failures;
      rep.fail("lemma32 sample " + std::to_string(done) + " on " + g1->name() +
               " x " + g2->name() + " failed");
    }
    ++done;
  }
  rep.results = {{"samples", done}, {"failed", failures}};
  rep.text << "  " << done << " sampled tuples, " << failures << " failures\n";
}

void run_lemma34(Report& rep, int p, const Options& opt) {
  int want = opt.count > 0 ? opt.count : 50;
  std::mt19937_64 rng(opt.seed);
  auto pairs = builtin_pairs(p, std::min(opt.lattice_cap, 256), opt);
  if (pairs.empty()) throw DomainError("no builtin pair fits the cap");
  int done = 0, failures = 0, split = 0;
  while (done < want) {
    auto& [g1, g2] = pairs[rng() % pairs.size()];
    TupleSampler sampler(g1, g2, opt.lattice_cap);
    GoursatTuple t = sampler.sample(rng, true);
    Lemma34Report r = lemma34_verify(sampler.product(), t);
    if (!r.ok()) {
      ++failures;
      rep.fail("lemma34 sample " + std::to_string(done) + " on " + g1->name() +
               " x " + g2->name() + " failed");
    }
    if (r.split_consistent) ++split;
    ++done;
  }
  rep.results = {{"samples", done}, {"failed", failures}, {"split_consistent", split}};
  rep.text << "  " << done << " sampled tuples with abelian H2, " << failures
           << " failures, " << split << " split-consistent\n";
}

void run_witness(Report& rep, const std::vector<std::string>& files, int p,
                 const Options& opt) {
  GroupRef g1, g2;
  if (files.size() == 2) {
    g1 = load_group_file(files[0], opt);
    g2 = load_group_file(files[1], opt);
  } else if (files.empty()) {
    auto corpus = builtin_corpus(p, opt.enumerate_options());
    const CorpusEntry& e =
        corpus_entry(corpus, p == 2 ? "R2" : "Heis" + std::to_string(p));
    g1 = e.group;
    g2 = e.group;
  } else {
    throw DomainError("witness scenario takes zero or two files");
  }
  if (g1->generator_elements().size() < 2 || g2->generator_elements().size() < 2)
    throw DomainError("witness scenario needs two-generator groups");
  auto pair_of = [](const GroupRef& g) {
    return std::pair{g->generator_elements()[0], g->generator_elements()[1]};
  };
  rep.results["witnesses"] = json::array();
  collect_witness(rep, theorem_witness(g1, pair_of(g1), g2, pair_of(g2)));
}

void run_torsion(Report& rep, const std::vector<std::string>& files,
                 const std::string& element, int n, int m, const Options& opt) {
  GroupRef g;
  if (files.size() == 1) {
    g = load_group_file(files[0], opt);
  } else if (files.empty()) {
    g = corpus_entry(builtin_corpus(2, opt.enumerate_options()), "Q8").group;
  } else {
    throw DomainError("torsion scenario takes zero or one file");
  }
  int x = element.empty() ? g->generator_elements().at(0)
                          : element_from_word(g, element);
  rep.results["witnesses"] = json::array();
  collect_witness(rep, torsion_witness(g, x, n, m));
}

void run_transfer(Report& rep, const std::vector<std::string>& files,
                  const std::string& element, const Options& opt) {
  GroupRef g;
  if (files.size() == 1) {
    g = load_group_file(files[0], opt);
  } else if (files.empty()) {
    g = corpus_entry(builtin_corpus(2, opt.enumerate_options()), "Q8").group;
  } else {
    throw DomainError("transfer scenario takes zero or one file");
  }
  int x = element.empty() ? g->generator_elements().at(0)
                          : element_from_word(g, element);
  rep.results["witnesses"] = json::array();
  collect_witness(rep, transfer_witness(g, x));
}

void run_identities(Report& rep, const std::vector<std::string>& files, int p,
                    const Options& opt) {
  rep.results["groups"] = json::array();
  for (const GroupRef& g : scenario_groups(files, p, opt)) {
    IdentityCheckReport r = commutator_identity_check(g);
    rep.results["groups"].push_back({{"group", g->name()},
                                     {"quotient_order", r.quotient_order},
                                     {"pairs_checked", r.pairs_checked},
                                     {"counterexamples", r.counterexamples.size()}});
    rep.text << "  " << g->name() << ": " << r.pairs_checked << " pairs, "
             << r.counterexamples.size() << " counterexamples\n";
    if (!r.ok()) rep.fail(g->name() + ": commutator identity counterexample");
  }
}

void run_violations(Report& rep, const std::vector<std::string>& files, int p,
                    const std::string& mode_name, const std::string& group_name,
                    const Options& opt) {
  GroupRef g;
  if (files.size() == 1) {
    g = load_group_file(files[0], opt);
  } else if (!group_name.empty()) {
    g = corpus_entry(builtin_corpus(p, opt.enumerate_options()), group_name).group;
  } else {
    throw DomainError("violations scenario needs a file or --group");
  }
  ViolationMode mode;
  if (mode_name == "poset") {
    mode = ViolationMode::Poset;
  } else if (mode_name == "pointwise") {
    mode = ViolationMode::Pointwise;
  } else {
    throw DomainError("mode must be 'pointwise' or 'poset'");
  }
  ViolationCensus c = phi_embedding_violations(g, mode, opt.lattice_cap);
  rep.results = {{"group", g->name()},
                 {"mode", mode_name},
                 {"examined", c.examined},
                 {"violations", c.count()},
                 {"sample", json::array()}};
  const size_t sample_cap = 100;
  if (mode == ViolationMode::Pointwise) {
    for (size_t i = 0; i < c.pointwise.size() && i < sample_cap; ++i)
      rep.results["sample"].push_back(
          {{"element", c.pointwise[i].element},
           {"subgroup_order", c.lattice.nodes[c.pointwise[i].subgroup].order()}});
  } else {
    for (size_t i = 0; i < c.poset.size() && i < sample_cap; ++i)
      rep.results["sample"].push_back(
          {{"h_order", c.lattice.nodes[c.poset[i].sub_h].order()},
           {"k_order", c.lattice.nodes[c.poset[i].sub_k].order()}});
  }
  rep.text << g->name() << " (" << mode_name << "): " << c.count()
           << " violations in " << c.examined << " candidates\n";
}

void run_corpus_list(Report& rep, int p, const Options& opt) {
  rep.results["entries"] = json::array();
  for (const CorpusEntry& e : builtin_corpus(p, opt.enumerate_options())) {
    rep.results["entries"].push_back(
        {{"name", e.name}, {"order", e.expected_order}, {"tags", tags_json(e.tags)}});
    rep.text << "  " << e.name << ": order " << e.expected_order
             << (e.tags.abelian ? ", abelian" : "")
             << (e.tags.powerful ? ", powerful" : "") << ", d = " << e.tags.rank
             << ", class = " << e.tags.nilpotency_class << "\n";
  }
}

int emit(Report& rep, const Options& opt, double elapsed_ms) {
  if (opt.json_output) {
    json envelope = {{"tool_version", kVersion},
                     {"command", rep.command},
                     {"inputs", rep.inputs},
                     {"results", rep.results},
                     {"failures", rep.failures},
                     {"elapsed_ms", elapsed_ms}};
    std::cout << envelope.dump(2) << "\n";
  } else {
    std::cout << rep.command << ":\n" << rep.text.str();
    if (rep.failures.empty()) {
      std::cout << "ok\n";
    } else {
      for (const std::string& f : rep.failures) std::cout << "FAIL: " << f << "\n";
    }
  }
  return rep.failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite p-group computation engine"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json_output, "emit a JSON report envelope");
  app.add_option("--p", opt.prime, "prime for builtin catalogs");
  app.add_option("--seed", opt.seed, "seed for randomized tuple sampling");
  app.add_option("--max-cosets", opt.max_cosets, "live coset limit");
  app.add_option("--max-order", opt.max_order, "materialized order cap");
  app.add_option("--lattice-cap", opt.lattice_cap, "subgroup lattice order cap");
  app.add_option("--count", opt.count, "sample count for property scenarios");

  std::string file1, file2, element, mode = "pointwise", group_name, scenario_name;
  std::vector<std::string> files;
  int n_param = 1, m_param = 1;

  CLI::App* build = app.add_subcommand("build", "enumerate a presentation file");
  build->add_option("file", file1)->required();

  CLI::App* analyze = app.add_subcommand("analyze", "structure report");
  analyze->add_option("file", file1)->required();

  CLI::App* lattice = app.add_subcommand("lattice", "subgroup lattice statistics");
  lattice->add_option("file", file1)->required();
  lattice->add_option("--cap", opt.lattice_cap, "lattice order cap");

  CLI::App* census = app.add_subcommand("goursat-census", "subgroups vs 5-tuples");
  census->add_option("file1", file1)->required();
  census->add_option("file2", file2)->required();

  CLI::App* scenario = app.add_subcommand("scenario", "verification scenario suites");
  scenario
      ->add_option("name", scenario_name,
                   "lemma43|lemma44|lemma32|lemma34|witness|torsion|transfer|"
                   "identities|violations")
      ->required();
  scenario->add_option("--files", files, "presentation files instead of builtins");
  scenario->add_option("--element", element, "element as a word in the generators");
  scenario->add_option("--n", n_param, "torsion order exponent");
  scenario->add_option("--m", m_param, "cyclic cofactor exponent");
  scenario->add_option("--mode", mode, "violations mode: pointwise|poset");
  scenario->add_option("--group", group_name, "builtin group name");

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "builtin catalog");
  CLI::App* corpus_list = corpus_cmd->add_subcommand("list", "list entries");
  corpus_cmd->require_subcommand(1);

  // let global flags (--p, --json, ...) appear after the subcommand
  for (CLI::App* sub : {build, analyze, lattice, census, scenario, corpus_cmd, corpus_list})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto start = std::chrono::steady_clock::now();
  Report rep;
  try {
    if (app.got_subcommand(build)) {
      rep.command = "build";
      rep.inputs = {{"file", file1}};
      run_build(rep, file1, opt);
    } else if (app.got_subcommand(analyze)) {
      rep.command = "analyze";
      rep.inputs = {{"file", file1}};
      run_analyze(rep, file1, opt);
    } else if (app.got_subcommand(lattice)) {
      rep.command = "lattice";
      rep.inputs = {{"file", file1}, {"cap", opt.lattice_cap}};
      run_lattice(rep, file1, opt);
    } else if (app.got_subcommand(census)) {
      rep.command = "goursat-census";
      rep.inputs = {{"file1", file1}, {"file2", file2}, {"cap", opt.lattice_cap}};
      run_census(rep, file1, file2, opt);
    } else if (app.got_subcommand(scenario)) {
      rep.command = "scenario " + scenario_name;
      int p = opt.prime;
      rep.inputs = {{"files", files}, {"seed", opt.seed}};
      if (scenario_name == "lemma43") {
        if (p == 0) p = 3;
        if (p == 2) throw DomainError("lemma43 is the odd-prime scenario");
        rep.inputs["p"] = p;
        run_lemma_iso(rep, files, p, opt);
      } else if (scenario_name == "lemma44") {
        rep.inputs["p"] = 2;
        run_lemma_iso(rep, files, 2, opt);
      } else if (scenario_name == "lemma32") {
        if (p == 0) p = 2;
        rep.inputs["p"] = p;
        run_lemma32(rep, p, opt);
      } else if (scenario_name == "lemma34") {
        if (p == 0) p = 2;
        rep.inputs["p"] = p;
        run_lemma34(rep, p, opt);
      } else if (scenario_name == "witness") {
        if (p == 0) p = 3;
        rep.inputs["p"] = p;
        run_witness(rep, files, p, opt);
      } else if (scenario_name == "torsion") {
        rep.inputs["n"] = n_param;
        rep.inputs["m"] = m_param;
        run_torsion(rep, files, element, n_param, m_param, opt);
      } else if (scenario_name == "transfer") {
        run_transfer(rep, files, element, opt);
      } else if (scenario_name == "identities") {
        if (p == 0) p = 2;
        rep.inputs["p"] = p;
        run_identities(rep, files, p, opt);
      } else if (scenario_name == "violations") {
        if (p == 0) p = 2;
        rep.inputs["p"] = p;
        rep.inputs["mode"] = mode;
        run_violations(rep, files, p, mode, group_name, opt);
      } else {
        throw DomainError("unknown scenario '" + scenario_name + "'");
      }
    } else if (app.got_subcommand(corpus_cmd)) {
      rep.command = "corpus list";
      int p = opt.prime == 0 ? 2 : opt.prime;
      rep.inputs = {{"p", p}};
      run_corpus_list(rep, p, opt);
    }
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return emit(rep, opt, elapsed);
}
