#pragma once

#include <filesystem>

#include "pgl/enumerate.hpp"

namespace pgl {

struct CorpusTags {
  bool abelian = false;
  bool powerful = false;
  int rank = 0;   // d(G)
  int nilpotency_class = 0;

  friend bool operator==(const CorpusTags&, const CorpusTags&) = default;
};

/// Catalog entry, materialized and verified at load time: the enumerated
/// order must match expected_order and the tags must match the recomputed
/// structure.
struct CorpusEntry {
  std::string name;
  Presentation presentation;
  int expected_order = 0;
  CorpusTags tags;
  GroupRef group;
};

/// Built-in catalog for p in {2, 3, 5}. Includes the reference quotients,
/// the extraspecial exponent-p^2 group (a powerful 2-generated negative
/// control), and the usual small abelian and nonabelian groups.
std::vector<CorpusEntry> builtin_corpus(int p, const EnumerateOptions& opt = {});

/// Lookup by name; throws DomainError when absent.
const CorpusEntry& corpus_entry(const std::vector<CorpusEntry>& corpus,
                                const std::string& name);

/// Load one presentation file (or every regular file in a directory, sorted
/// by filename). Files may carry optional header lines before the grammar
/// text:
///   name: Q8
///   expected_order: 8
///   tags: nonabelian, not-powerful, d=2, class=2
///   # comment
/// A declared expected_order or tag that disagrees with the enumerated group
/// is an error.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path,
                                     const EnumerateOptions& opt = {});

/// Recompute the tags of a materialized group.
CorpusTags compute_tags(const GroupRef& g);

}  // namespace pgl
