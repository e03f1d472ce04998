#include "pgl/group.hpp"

#include <numeric>

#include "pgl/errors.hpp"

namespace pgl {

namespace {

bool is_power_of(long long n, long long p) {
  if (p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

std::shared_ptr<const ConcreteGroup> ConcreteGroup::create(Data data) {
  const int n = data.order;
  if (n < 1) throw DomainError("group order must be positive");
  if (static_cast<long long>(data.mul.size()) != static_cast<long long>(n) * n)
    throw DomainError("multiplication table has wrong size");
  for (int v : data.mul)
    if (v < 0 || v >= n) throw DomainError("table entry out of range");
  for (int g : data.generators)
    if (g < 0 || g >= n) throw DomainError("generator index out of range");
  if (!data.element_words.empty() &&
      static_cast<int>(data.element_words.size()) != n)
    throw DomainError("element_words must have one entry per element");

  auto grp = std::shared_ptr<ConcreteGroup>(new ConcreteGroup());
  grp->n_ = n;
  grp->mul_ = std::move(data.mul);
  grp->generators_ = std::move(data.generators);
  grp->prime_ = data.prime;
  grp->element_words_ = std::move(data.element_words);
  grp->generator_names_ = std::move(data.generator_names);
  grp->name_ = std::move(data.name);

  for (int a = 0; a < n; ++a)
    if (grp->mul(identity, a) != a || grp->mul(a, identity) != a)
      throw DomainError("element 0 is not a two-sided identity");

  grp->inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (grp->mul(a, b) == identity && grp->mul(b, a) == identity) {
        grp->inv_[a] = b;
        break;
      }
    }
    if (grp->inv_[a] < 0) throw DomainError("element has no two-sided inverse");
  }

  grp->p_group_ = data.prime >= 2 && is_power_of(n, data.prime);
  return grp;
}

int ConcreteGroup::power(int a, long long e) const {
  if (a < 0 || a >= n_) throw DomainError("element index out of range");
  int base = e >= 0 ? a : inv(a);
  long long k = e >= 0 ? e : -e;
  int acc = identity;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

int ConcreteGroup::conjugate(int a, int g) const {
  return mul(mul(inv(g), a), g);
}

int ConcreteGroup::commutator(int a, int b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

int ConcreteGroup::element_order(int a) const {
  if (a < 0 || a >= n_) throw DomainError("element index out of range");
  int x = a, k = 1;
  while (x != identity) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

long long ConcreteGroup::exponent() const {
  long long e = 1;
  for (int a = 0; a < n_; ++a) e = std::lcm(e, (long long)element_order(a));
  return e;
}

int ConcreteGroup::evaluate(const Word& w) const {
  return evaluate(w, generators_);
}

int ConcreteGroup::evaluate(const Word& w, std::span<const int> images) const {
  int acc = identity;
  for (const Factor& f : w.factors()) {
    if (f.gen >= static_cast<int>(images.size()))
      throw DomainError("word references generator " + std::to_string(f.gen) +
                        " but only " + std::to_string(images.size()) +
                        " images were given");
    acc = mul(acc, power(images[f.gen], f.exp));
  }
  return acc;
}

ValidationReport ConcreteGroup::validate(int exhaustive_cap) const {
  ValidationReport r;
  for (int a = 0; a < n_; ++a) {
    if (mul(identity, a) != a || mul(a, identity) != a) {
      r.ok = false;
      r.failure = "identity fails at element " + std::to_string(a);
      r.triple = {identity, a, -1};
      return r;
    }
    int b = inv(a);
    if (mul(a, b) != identity || mul(b, a) != identity) {
      r.ok = false;
      r.failure = "inverse fails at element " + std::to_string(a);
      r.triple = {a, b, -1};
      return r;
    }
  }

  auto assoc_fail = [&](int a, int b, int c) {
    r.ok = false;
    r.failure = "associativity fails at (" + std::to_string(a) + ", " +
                std::to_string(b) + ", " + std::to_string(c) + ")";
    r.triple = {a, b, c};
  };
  if (n_ <= exhaustive_cap) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            assoc_fail(a, b, c);
            return r;
          }
  } else {
    // Light's test: with a verified generating set, checking triples
    // (a, g, b) over generators g decides associativity.
    for (int g : generators_)
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          if (mul(mul(a, g), b) != mul(a, mul(g, b))) {
            assoc_fail(a, g, b);
            return r;
          }
  }

  // Generator closure: orbit of the identity under right multiplication.
  std::vector<char> seen(n_, 0);
  std::vector<int> work{identity};
  seen[identity] = 1;
  for (size_t i = 0; i < work.size(); ++i)
    for (int g : generators_) {
      int y = mul(work[i], g);
      if (!seen[y]) {
        seen[y] = 1;
        work.push_back(y);
      }
    }
  if (static_cast<int>(work.size()) != n_) {
    r.ok = false;
    r.failure = "generators do not generate the whole group (reach " +
                std::to_string(work.size()) + " of " + std::to_string(n_) + ")";
    return r;
  }
  return r;
}

std::string ConcreteGroup::describe_element(int a) const {
  if (a == identity) return "1";
  if (has_element_words()) return element_words_[a].str(generator_names_);
  return "#" + std::to_string(a);
}

GroupRef cyclic_group(int order, int prime, const std::string& name) {
  if (order < 1) throw DomainError("cyclic group order must be positive");
  ConcreteGroup::Data d;
  d.order = order;
  d.mul.resize(static_cast<size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      d.mul[a * order + b] = (a + b) % order;
  if (order > 1) d.generators = {1};
  d.prime = prime;
  d.generator_names = {"z"};
  d.element_words.reserve(order);
  for (int a = 0; a < order; ++a)
    d.element_words.push_back(a == 0 ? Word() : Word::generator(0, a));
  d.name = name.empty() ? "C" + std::to_string(order) : name;
  return ConcreteGroup::create(std::move(d));
}

}  // namespace pgl
