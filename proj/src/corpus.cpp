#include "pgl/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "pgl/errors.hpp"
#include "pgl/subgroup.hpp"

namespace pgl {

namespace {

struct CatalogRow {
  std::string name;
  std::string text;
  int order;
  CorpusTags tags;  // {abelian, powerful, d, class}
};

std::vector<CatalogRow> builtin_rows(int p) {
  const std::string ps = std::to_string(p);
  const std::string p2s = std::to_string(p * p);
  if (p == 2) {
    return {
        {"C2", "gens: x; rels: x^2", 2, {true, true, 1, 1}},
        {"C4", "gens: x; rels: x^4", 4, {true, true, 1, 1}},
        {"C8", "gens: x; rels: x^8", 8, {true, true, 1, 1}},
        {"C2xC2", "gens: x, y; rels: x^2, y^2, [x,y]", 4, {true, true, 2, 1}},
        {"C4xC4", "gens: x, y; rels: x^4, y^4, [x,y]", 16, {true, true, 2, 1}},
        {"D4", "gens: r, s; rels: r^4, s^2, (r s)^2", 8, {false, false, 2, 2}},
        {"Q8", "gens: x, y; rels: x^4, y^2 x^-2, y^-1 x y x", 8, {false, false, 2, 2}},
        {"M16", "gens: x, y; rels: x^8, y^2, y^-1 x y x^-5", 16, {false, true, 2, 2}},
        // class-3 entries so the mod-gamma_4 arithmetic is nontrivial
        {"D8", "gens: r, s; rels: r^8, s^2, (r s)^2", 16, {false, false, 2, 3}},
        {"SD16", "gens: x, y; rels: x^8, y^2, y^-1 x y x^-3", 16, {false, false, 2, 3}},
        {"R2", "gens: x1, x2; rels: x1^4, x2^4, [x1,x2]^2, [x1,x2,x1], [x1,x2,x2]",
         32, {false, false, 2, 2}},
    };
  }
  if (p == 3 || p == 5) {
    std::string cp = "C" + ps;
    std::vector<CatalogRow> rows = {
        {cp, "gens: x; rels: x^" + ps, p, {true, true, 1, 1}},
        {"C" + p2s, "gens: x; rels: x^" + p2s, p * p, {true, true, 1, 1}},
        {cp + "x" + cp, "gens: x, y; rels: x^" + ps + ", y^" + ps + ", [x,y]",
         p * p, {true, true, 2, 1}},
        {"Heis" + ps,
         "gens: x, y; rels: x^" + ps + ", y^" + ps + ", [x,y,x], [x,y,y]",
         p * p * p, {false, false, 2, 2}},
        // extraspecial of exponent p^2: the powerful 2-generated control
        {"ES" + ps + "e2",
         "gens: x, y; rels: x^" + p2s + ", y^" + ps + ", y^-1 x y x^-" +
             std::to_string(1 + p),
         p * p * p, {false, true, 2, 2}},
        {"R" + ps,
         "gens: x1, x2; rels: x1^" + ps + ", x2^" + ps + ", [x1,x2]^" + ps +
             ", [x1,x2,x1], [x1,x2,x2]",
         p * p * p, {false, false, 2, 2}},
    };
    if (p == 3)
      // the wreath product C3 wr C3: the one odd-prime class-3 group under
      // the order cap (p^4 = 625 is over it for p = 5)
      rows.push_back({"C3wrC3",
                      "gens: x, y; rels: x^3, y^3, [x, y^-1 x y], [x, y^-2 x y^2]",
                      81, {false, false, 2, 3}});
    return rows;
  }
  throw DomainError("builtin corpus ships for p in {2, 3, 5}, got " +
                    std::to_string(p));
}

CorpusEntry materialize_entry(std::string name, const std::string& text,
                              int expected_order, const CorpusTags* declared,
                              const EnumerateOptions& opt) {
  CorpusEntry e;
  e.name = std::move(name);
  e.presentation = parse_presentation(text);
  e.group = enumerate(e.presentation, opt);
  if (expected_order > 0 && e.group->order() != expected_order)
    throw DomainError("corpus entry '" + e.name + "': enumerated order " +
                      std::to_string(e.group->order()) + " != declared " +
                      std::to_string(expected_order));
  e.expected_order = e.group->order();
  e.tags = compute_tags(e.group);
  if (declared && !(*declared == e.tags))
    throw DomainError("corpus entry '" + e.name +
                      "': declared tags disagree with computed structure");
  // Rebuild the group with its display name attached.
  ConcreteGroup::Data d;
  d.order = e.group->order();
  d.mul.reserve(static_cast<size_t>(d.order) * d.order);
  for (int a = 0; a < d.order; ++a)
    for (int b = 0; b < d.order; ++b) d.mul.push_back(e.group->mul(a, b));
  d.generators = e.group->generator_elements();
  d.prime = e.group->prime();
  d.element_words = e.group->element_words();
  d.generator_names = e.group->generator_names();
  d.name = e.name;
  e.group = ConcreteGroup::create(std::move(d));
  return e;
}

}  // namespace

CorpusTags compute_tags(const GroupRef& g) {
  CorpusTags t;
  Subgroup whole = whole_group(g);
  t.abelian = commutator_subgroup(whole, whole).is_trivial();
  t.powerful = is_powerful(whole);
  t.rank = static_cast<int>(minimal_generators(whole).size());
  t.nilpotency_class = nilpotency_class(whole);
  return t;
}

std::vector<CorpusEntry> builtin_corpus(int p, const EnumerateOptions& opt) {
  std::vector<CorpusEntry> out;
  for (const CatalogRow& s : builtin_rows(p))
    out.push_back(materialize_entry(s.name, s.text, s.order, &s.tags, opt));
  return out;
}

const CorpusEntry& corpus_entry(const std::vector<CorpusEntry>& corpus,
                                const std::string& name) {
  for (const CorpusEntry& e : corpus)
    if (e.name == name) return e;
  throw DomainError("no corpus entry named '" + name + "'");
}

namespace {

CorpusEntry load_one(const std::filesystem::path& file, const EnumerateOptions& opt) {
  std::ifstream in(file);
  if (!in) throw DomainError("cannot open " + file.string());
  std::string name = file.stem().string();
  int expected_order = 0;
  std::vector<std::string> declared_tags;
  std::string body;

  std::string line;
  while (std::getline(in, line)) {
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    auto header = [&](const std::string& key) -> std::optional<std::string> {
      if (trimmed.rfind(key + ":", 0) != 0) return std::nullopt;
      return trimmed.substr(key.size() + 1);
    };
    if (auto v = header("name")) {
      name = *v;
      name.erase(0, name.find_first_not_of(" \t"));
      name.erase(name.find_last_not_of(" \t") + 1);
      continue;
    }
    if (auto v = header("expected_order")) {
      expected_order = std::stoi(*v);
      continue;
    }
    if (auto v = header("tags")) {
      std::stringstream ss(*v);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        if (!tok.empty()) declared_tags.push_back(tok);
      }
      continue;
    }
    body += line;
    body += '\n';
  }

  CorpusEntry e = materialize_entry(name, body, expected_order, nullptr, opt);
  for (const std::string& tok : declared_tags) {
    bool okay;
    if (tok == "abelian") okay = e.tags.abelian;
    else if (tok == "nonabelian") okay = !e.tags.abelian;
    else if (tok == "powerful") okay = e.tags.powerful;
    else if (tok == "not-powerful") okay = !e.tags.powerful;
    else if (tok.rfind("d=", 0) == 0) okay = e.tags.rank == std::stoi(tok.substr(2));
    else if (tok.rfind("class=", 0) == 0)
      okay = e.tags.nilpotency_class == std::stoi(tok.substr(6));
    else throw DomainError("unknown tag '" + tok + "' in " + file.string());
    if (!okay)
      throw DomainError("corpus entry '" + e.name + "': declared tag '" + tok +
                        "' disagrees with computed structure");
  }
  return e;
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path,
                                     const EnumerateOptions& opt) {
  std::vector<CorpusEntry> out;
  if (std::filesystem::is_directory(path)) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(path))
      if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.push_back(load_one(f, opt));
  } else {
    out.push_back(load_one(path, opt));
  }
  return out;
}

}  // namespace pgl
