#pragma once

#include <map>

#include "pgl/subgroup.hpp"

namespace pgl {

/// All subgroups of a p-group, each exactly once, in canonical order
/// (ascending order, then lexicographic element lists). Containment is the
/// element-set inclusion order, queried per pair.
struct SubgroupLattice {
  GroupRef group;
  std::vector<Subgroup> nodes;

  int node_count() const { return static_cast<int>(nodes.size()); }
  /// nodes[i] <= nodes[j] in the subgroup order.
  bool contains(int i, int j) const;
  std::vector<int> of_order(int k) const;
  /// Index of the node with the given element set, or -1.
  int index_of(const Subgroup& s) const;
  std::map<int, long long> count_by_order() const;
};

/// Layered cyclic extension: subgroups of order p^{k+1} arise from subgroups
/// S of order p^k by adjoining an element x of the normalizer of S with
/// x^p in S. Requires a p-group of order at most cap.
SubgroupLattice all_subgroups(const GroupRef& g, int cap = 512);

}  // namespace pgl
