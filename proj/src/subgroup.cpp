#include "pgl/subgroup.hpp"

#include <algorithm>
#include <set>

#include "pgl/errors.hpp"

namespace pgl {

namespace {

void check_parent(const GroupRef& g) {
  if (!g) throw DomainError("subgroup has no parent group");
}

void check_indices(const GroupRef& g, std::span<const int> xs) {
  for (int x : xs)
    if (x < 0 || x >= g->order())
      throw DomainError("element index " + std::to_string(x) + " out of range");
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Orbit of the identity under right multiplication by the seed. Finite order
// makes the result closed under inverses as well.
std::vector<int> closure_elements(const GroupRef& g, std::span<const int> seed) {
  std::vector<char> in(g->order(), 0);
  std::vector<int> work{ConcreteGroup::identity};
  in[ConcreteGroup::identity] = 1;
  for (size_t i = 0; i < work.size(); ++i)
    for (int s : seed) {
      int y = g->mul(work[i], s);
      if (!in[y]) {
        in[y] = 1;
        work.push_back(y);
      }
    }
  std::sort(work.begin(), work.end());
  return work;
}

}  // namespace

Subgroup unchecked_subgroup(GroupRef parent, std::vector<int> elements,
                            std::vector<int> generators) {
  Subgroup s;
  s.parent_ = std::move(parent);
  s.elements_ = std::move(elements);
  s.generators_ = std::move(generators);
  return s;
}

namespace {

// Sequenced construction: the generator reduction must read the element list
// before it is moved into the subgroup.
Subgroup make_subgroup_reduced(const GroupRef& g, std::vector<int> elems) {
  std::vector<int> gens = reduce_generators(g, elems);
  return unchecked_subgroup(g, std::move(elems), std::move(gens));
}

}  // namespace

Subgroup Subgroup::from_elements(GroupRef parent, std::vector<int> elements,
                                 std::vector<int> generators) {
  check_parent(parent);
  check_indices(parent, elements);
  check_indices(parent, generators);
  elements = sorted_unique(std::move(elements));
  if (elements.empty() || elements[0] != ConcreteGroup::identity)
    throw DomainError("subgroup must contain the identity");
  auto has = [&](int x) {
    return std::binary_search(elements.begin(), elements.end(), x);
  };
  for (int a : elements) {
    if (!has(parent->inv(a))) throw DomainError("element set not closed under inversion");
    for (int b : elements)
      if (!has(parent->mul(a, b))) throw DomainError("element set not closed under multiplication");
  }
  for (int x : generators)
    if (!has(x)) throw DomainError("generator outside the element set");
  if (closure_elements(parent, generators) != elements)
    throw DomainError("generators do not generate the element set");
  return unchecked_subgroup(std::move(parent), std::move(elements), std::move(generators));
}

bool Subgroup::contains(int x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool Subgroup::subset_of(const Subgroup& other) const {
  if (parent_ != other.parent_) throw DomainError("subgroups of different parents");
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

bool Subgroup::same_elements(const Subgroup& other) const {
  return parent_ == other.parent_ && elements_ == other.elements_;
}

Subgroup whole_group(const GroupRef& g) {
  check_parent(g);
  std::vector<int> all(g->order());
  for (int i = 0; i < g->order(); ++i) all[i] = i;
  std::vector<int> gens = g->generator_elements();
  if (closure_elements(g, gens) != all)
    gens = reduce_generators(g, all);  // fall back to a computed set
  return unchecked_subgroup(g, std::move(all), std::move(gens));
}

Subgroup trivial_subgroup(const GroupRef& g) {
  check_parent(g);
  return unchecked_subgroup(g, {ConcreteGroup::identity}, {});
}

Subgroup closure(const GroupRef& g, std::span<const int> seed) {
  check_parent(g);
  check_indices(g, seed);
  std::vector<int> gens = sorted_unique({seed.begin(), seed.end()});
  std::erase(gens, ConcreteGroup::identity);
  std::vector<int> elems = closure_elements(g, gens);
  return unchecked_subgroup(g, std::move(elems), std::move(gens));
}

std::vector<int> reduce_generators(const GroupRef& g, std::span<const int> elements) {
  std::vector<int> gens;
  std::vector<int> have{ConcreteGroup::identity};
  std::vector<char> in(g->order(), 0);
  in[ConcreteGroup::identity] = 1;
  for (int x : elements) {
    if (in[x]) continue;
    gens.push_back(x);
    // grow the reached set by the new generator
    have = closure_elements(g, gens);
    std::fill(in.begin(), in.end(), 0);
    for (int y : have) in[y] = 1;
    if (have.size() == elements.size()) break;
  }
  return gens;
}

Subgroup normal_closure(const GroupRef& g, std::span<const int> seed) {
  check_parent(g);
  check_indices(g, seed);
  std::vector<int> gens = sorted_unique({seed.begin(), seed.end()});
  std::erase(gens, ConcreteGroup::identity);
  for (;;) {
    std::vector<int> elems = closure_elements(g, gens);
    std::vector<char> in(g->order(), 0);
    for (int e : elems) in[e] = 1;
    bool grew = false;
    for (int e : elems)
      for (int c : g->generator_elements()) {
        int y = g->conjugate(e, c);
        if (!in[y]) {
          in[y] = 1;
          gens.push_back(y);
          grew = true;
        }
      }
    if (!grew)
      return make_subgroup_reduced(g, std::move(elems));
  }
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) throw DomainError("commutator of subgroups with different parents");
  const GroupRef& g = a.parent();
  std::vector<char> seen(g->order(), 0);
  std::vector<int> comms;
  for (int x : a.elements())
    for (int y : b.elements()) {
      int c = g->commutator(x, y);
      if (!seen[c]) {
        seen[c] = 1;
        if (c != ConcreteGroup::identity) comms.push_back(c);
      }
    }
  std::sort(comms.begin(), comms.end());
  std::vector<int> elems = closure_elements(g, comms);
  return make_subgroup_reduced(g, std::move(elems));
}

Subgroup power_subgroup(const Subgroup& h, long long k) {
  if (k < 1) throw DomainError("power subgroup exponent must be positive");
  const GroupRef& g = h.parent();
  std::vector<char> seen(g->order(), 0);
  std::vector<int> powers;
  for (int x : h.elements()) {
    int y = g->power(x, k);
    if (!seen[y]) {
      seen[y] = 1;
      if (y != ConcreteGroup::identity) powers.push_back(y);
    }
  }
  std::sort(powers.begin(), powers.end());
  std::vector<int> elems = closure_elements(g, powers);
  return make_subgroup_reduced(g, std::move(elems));
}

Subgroup product_subgroup(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) throw DomainError("product of subgroups with different parents");
  const GroupRef& g = a.parent();
  std::vector<int> seed = a.generators();
  seed.insert(seed.end(), b.generators().begin(), b.generators().end());
  std::vector<int> elems = closure_elements(g, seed);

  // When the set product is already a subgroup it must match the generated
  // one and the order formula; anything else is an engine bug.
  std::vector<char> in_prod(g->order(), 0);
  long long prod_size = 0;
  for (int x : a.elements())
    for (int y : b.elements()) {
      int z = g->mul(x, y);
      if (!in_prod[z]) {
        in_prod[z] = 1;
        ++prod_size;
      }
    }
  if (prod_size == static_cast<long long>(elems.size())) {
    std::vector<int> meet;
    std::set_intersection(a.elements().begin(), a.elements().end(),
                          b.elements().begin(), b.elements().end(),
                          std::back_inserter(meet));
    long long expected = static_cast<long long>(a.order()) * b.order() /
                         static_cast<long long>(meet.size());
    if (expected != prod_size)
      throw InternalError("product subgroup order check failed");
  }
  return make_subgroup_reduced(g, std::move(elems));
}

Subgroup frattini(const Subgroup& h) {
  const GroupRef& g = h.parent();
  if (!g->is_p_group()) throw DomainError("Frattini subgroup requires a p-group parent");
  return product_subgroup(power_subgroup(h, g->prime()),
                          commutator_subgroup(h, h));
}

std::vector<Subgroup> lower_central_series(const Subgroup& h) {
  std::vector<Subgroup> series{h};
  for (;;) {
    Subgroup next = commutator_subgroup(series.back(), h);
    if (next.same_elements(series.back())) return series;
    series.push_back(std::move(next));
  }
}

Subgroup lower_central_term(const Subgroup& h, int k) {
  if (k < 1) throw DomainError("lower central series index starts at 1");
  auto series = lower_central_series(h);
  size_t i = std::min<size_t>(k - 1, series.size() - 1);
  return series[i];
}

int nilpotency_class(const Subgroup& h) {
  auto series = lower_central_series(h);
  if (!series.back().is_trivial())
    throw DomainError("nilpotency class undefined: series does not reach 1");
  return static_cast<int>(series.size()) - 1;
}

Subgroup center(const GroupRef& g) {
  check_parent(g);
  std::vector<int> elems;
  for (int x = 0; x < g->order(); ++x) {
    bool central = true;
    for (int y = 0; y < g->order() && central; ++y)
      if (g->mul(x, y) != g->mul(y, x)) central = false;
    if (central) elems.push_back(x);
  }
  return unchecked_subgroup(g, elems, reduce_generators(g, elems));
}

Subgroup normalizer(const Subgroup& s) {
  const GroupRef& g = s.parent();
  std::vector<int> elems;
  for (int x = 0; x < g->order(); ++x) {
    bool norm = true;
    for (int gen : s.generators())
      if (!s.contains(g->conjugate(gen, x))) {
        norm = false;
        break;
      }
    if (norm) elems.push_back(x);
  }
  return unchecked_subgroup(g, elems, reduce_generators(g, elems));
}

bool is_normal_in(const Subgroup& n, const Subgroup& h, std::array<int, 3>* witness) {
  if (n.parent() != h.parent()) throw DomainError("subgroups of different parents");
  if (!n.subset_of(h)) {
    if (witness) *witness = {-1, -1, -1};
    return false;
  }
  const GroupRef& g = n.parent();
  for (int c : h.generators())
    for (int m : n.generators()) {
      int y = g->conjugate(m, c);
      if (!n.contains(y)) {
        if (witness) *witness = {c, m, y};
        return false;
      }
    }
  return true;
}

bool is_abelian(const Subgroup& h) {
  const GroupRef& g = h.parent();
  for (int a : h.generators())
    for (int b : h.generators())
      if (g->mul(a, b) != g->mul(b, a)) return false;
  return true;
}

std::vector<int> minimal_generators(const Subgroup& h) {
  const GroupRef& g = h.parent();
  if (!g->is_p_group()) throw DomainError("minimal generating set requires a p-group parent");
  Subgroup phi = frattini(h);
  std::vector<int> picks;
  std::vector<int> seed = phi.generators();
  std::vector<int> reached = phi.elements();
  while (reached.size() < h.elements().size()) {
    for (int x : h.elements()) {
      if (std::binary_search(reached.begin(), reached.end(), x)) continue;
      picks.push_back(x);
      seed.push_back(x);
      reached = closure(g, seed).elements();
      break;
    }
  }
  return picks;
}

bool is_powerful(const Subgroup& h) {
  const GroupRef& g = h.parent();
  if (!g->is_p_group()) throw DomainError("powerful predicate requires a p-group");
  long long k = g->prime() == 2 ? 4 : g->prime();
  return commutator_subgroup(h, h).subset_of(power_subgroup(h, k));
}

bool is_powerful(const GroupRef& g) { return is_powerful(whole_group(g)); }

}  // namespace pgl
