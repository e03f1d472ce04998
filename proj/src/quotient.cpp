#include "pgl/quotient.hpp"

#include <algorithm>

#include "pgl/errors.hpp"

namespace pgl {

int Quotient::map(int parent_element) const {
  if (parent_element < 0 || parent_element >= static_cast<int>(coset_of.size()))
    throw DomainError("element index out of range");
  int q = coset_of[parent_element];
  if (q < 0) throw DomainError("element lies outside the quotient domain");
  return q;
}

Quotient quotient(const Subgroup& h, const Subgroup& n) {
  const GroupRef& g = h.parent();
  if (n.parent() != g) throw DomainError("quotient: subgroups of different parents");
  std::array<int, 3> w{};
  if (!is_normal_in(n, h, &w)) {
    if (w[0] < 0) throw DomainError("quotient: kernel is not contained in the domain");
    throw NotNormalError("quotient: kernel not normal in domain (conjugating " +
                             std::to_string(w[1]) + " by " + std::to_string(w[0]) +
                             " gives " + std::to_string(w[2]) + ", outside)",
                         w[0], w[1], w[2]);
  }

  Quotient q;
  q.domain = h;
  q.kernel = n;
  q.coset_of.assign(g->order(), -1);
  for (int x : h.elements()) {
    if (q.coset_of[x] >= 0) continue;
    int idx = static_cast<int>(q.reps.size());
    q.reps.push_back(x);
    for (int m : n.elements()) q.coset_of[g->mul(m, x)] = idx;
  }

  const int qn = static_cast<int>(q.reps.size());
  ConcreteGroup::Data d;
  d.order = qn;
  d.mul.resize(static_cast<size_t>(qn) * qn);
  for (int a = 0; a < qn; ++a)
    for (int b = 0; b < qn; ++b)
      d.mul[a * qn + b] = q.coset_of[g->mul(q.reps[a], q.reps[b])];
  for (int gen : h.generators()) {
    int img = q.coset_of[gen];
    if (img != ConcreteGroup::identity &&
        std::find(d.generators.begin(), d.generators.end(), img) == d.generators.end())
      d.generators.push_back(img);
  }
  d.prime = g->prime();
  d.name = h.is_whole() && !g->name().empty() ? g->name() + "/N" : "";
  q.group = ConcreteGroup::create(std::move(d));
  return q;
}

std::pair<Quotient, Homomorphism> quotient_with_projection(const GroupRef& g,
                                                           const Subgroup& n) {
  Quotient q = quotient(whole_group(g), n);
  Homomorphism proj{g, q.group, q.coset_of};
  proj.require_valid("quotient projection");
  return {std::move(q), std::move(proj)};
}

Quotient materialize(const Subgroup& h) {
  return quotient(h, trivial_subgroup(h.parent()));
}

Quotient abelianization(const Subgroup& h) {
  return quotient(h, commutator_subgroup(h, h));
}

}  // namespace pgl
