#include "pgl/lattice.hpp"

#include <algorithm>
#include <set>

#include "pgl/errors.hpp"

namespace pgl {

bool SubgroupLattice::contains(int i, int j) const {
  return nodes.at(i).subset_of(nodes.at(j));
}

std::vector<int> SubgroupLattice::of_order(int k) const {
  std::vector<int> out;
  for (int i = 0; i < node_count(); ++i)
    if (nodes[i].order() == k) out.push_back(i);
  return out;
}

int SubgroupLattice::index_of(const Subgroup& s) const {
  for (int i = 0; i < node_count(); ++i)
    if (nodes[i].same_elements(s)) return i;
  return -1;
}

std::map<int, long long> SubgroupLattice::count_by_order() const {
  std::map<int, long long> out;
  for (const Subgroup& s : nodes) out[s.order()]++;
  return out;
}

SubgroupLattice all_subgroups(const GroupRef& g, int cap) {
  if (!g) throw DomainError("all_subgroups: null group");
  if (g->order() > cap)
    throw LimitError("group order " + std::to_string(g->order()) +
                     " exceeds the lattice cap " + std::to_string(cap));
  if (!g->is_p_group())
    throw DomainError("subgroup lattice is implemented for p-groups only");
  const int p = g->prime();
  const int n = g->order();

  std::set<std::vector<int>> seen;
  std::vector<Subgroup> nodes;
  std::vector<Subgroup> layer{trivial_subgroup(g)};
  seen.insert(layer[0].elements());
  nodes.push_back(layer[0]);

  while (!layer.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& s : layer) {
      Subgroup norm = normalizer(s);
      std::vector<char> visited(n, 0);
      for (int e : s.elements()) visited[e] = 1;
      for (int x : norm.elements()) {
        if (visited[x]) continue;
        // one candidate per coset xS
        for (int m : s.elements()) visited[g->mul(x, m)] = 1;
        if (!s.contains(g->power(x, p))) continue;
        std::vector<int> seed = s.generators();
        seed.push_back(x);
        Subgroup t = closure(g, seed);
        if (t.order() != static_cast<long long>(s.order()) * p)
          throw InternalError("cyclic extension produced a wrong-order subgroup");
        if (seen.insert(t.elements()).second) {
          next.push_back(t);
          nodes.push_back(std::move(t));
        }
      }
    }
    layer = std::move(next);
  }

  std::sort(nodes.begin(), nodes.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return SubgroupLattice{g, std::move(nodes)};
}

}  // namespace pgl
