#pragma once

// Brute-force reference computations for the tests, deliberately independent
// of the library's algorithms: closures are repeated-product fixpoints over
// the raw table, and subgroup enumeration is a fixpoint over one-element
// extensions starting from the trivial subgroup.

#include <algorithm>
#include <set>
#include <vector>

#include "pgl/group.hpp"

namespace oracle {

inline std::vector<int> closure(const pgl::GroupRef& g, std::vector<int> seed) {
  std::set<int> s(seed.begin(), seed.end());
  s.insert(pgl::ConcreteGroup::identity);
  for (;;) {
    std::set<int> bigger = s;
    for (int a : s) {
      bigger.insert(g->inv(a));
      for (int b : s) bigger.insert(g->mul(a, b));
    }
    if (bigger == s) break;
    s = std::move(bigger);
  }
  return {s.begin(), s.end()};
}

inline std::vector<int> conjugate_closure(const pgl::GroupRef& g,
                                          std::vector<int> seed) {
  std::set<int> s(seed.begin(), seed.end());
  for (;;) {
    std::vector<int> cur = closure(g, {s.begin(), s.end()});
    std::set<int> bigger(cur.begin(), cur.end());
    for (int a : cur)
      for (int c = 0; c < g->order(); ++c)
        bigger.insert(g->mul(g->mul(g->inv(c), a), c));
    if (bigger == std::set<int>(cur.begin(), cur.end())) return cur;
    s = std::move(bigger);
  }
}

inline std::set<std::vector<int>> all_subgroups(const pgl::GroupRef& g) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> work;
  std::vector<int> triv{pgl::ConcreteGroup::identity};
  found.insert(triv);
  work.push_back(triv);
  while (!work.empty()) {
    std::vector<int> s = work.back();
    work.pop_back();
    for (int x = 0; x < g->order(); ++x) {
      std::vector<int> seed = s;
      seed.push_back(x);
      std::vector<int> t = closure(g, seed);
      if (found.insert(t).second) work.push_back(t);
    }
  }
  return found;
}

inline std::vector<int> commutator_set_closure(const pgl::GroupRef& g,
                                               const std::vector<int>& a,
                                               const std::vector<int>& b) {
  std::vector<int> comms;
  for (int x : a)
    for (int y : b)
      comms.push_back(g->mul(g->mul(g->inv(x), g->inv(y)), g->mul(x, y)));
  return closure(g, comms);
}

// Intersection of the index-p subgroups of the (sub)group with the given
// element set, via the exhaustive subgroup enumeration above.
inline std::vector<int> frattini(const pgl::GroupRef& g,
                                 const std::vector<int>& h) {
  auto subs = all_subgroups(g);
  std::vector<int> meet = h;
  size_t target = h.size() / static_cast<size_t>(g->prime());
  for (const auto& s : subs) {
    if (s.size() != target) continue;
    if (!std::includes(h.begin(), h.end(), s.begin(), s.end())) continue;
    std::vector<int> next;
    std::set_intersection(meet.begin(), meet.end(), s.begin(), s.end(),
                          std::back_inserter(next));
    meet = std::move(next);
  }
  return meet;
}

}  // namespace oracle
