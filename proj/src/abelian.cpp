#include "pgl/abelian.hpp"

#include <algorithm>

#include "pgl/errors.hpp"

namespace pgl {

long long AbelianInvariants::product() const {
  long long p = 1;
  for (long long d : divisors) p *= d;
  return p;
}

bool AbelianInvariants::contains(long long v) const {
  return std::find(divisors.begin(), divisors.end(), v) != divisors.end();
}

std::string AbelianInvariants::str() const {
  std::string out = "[";
  for (size_t i = 0; i < divisors.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(divisors[i]);
  }
  return out + "]";
}

AbelianInvariants abelian_invariants(const Subgroup& h) {
  const GroupRef& g = h.parent();
  if (!g->is_p_group()) throw DomainError("abelian invariants require a p-group");
  const long long p = g->prime();

  Quotient ab = abelianization(h);
  Subgroup layer = whole_group(ab.group);

  // s[i] = log_p |A^{p^i}|; the count of divisors >= p^k is s[k-1] - s[k].
  std::vector<int> s;
  for (;;) {
    int log = 0;
    for (long long m = layer.order(); m > 1; m /= p) ++log;
    s.push_back(log);
    if (layer.is_trivial()) break;
    layer = power_subgroup(layer, p);
  }

  AbelianInvariants inv;
  for (size_t k = 1; k < s.size(); ++k) {
    int at_least_k = s[k - 1] - s[k];
    int at_least_k1 = k < s.size() - 1 ? s[k] - s[k + 1] : 0;
    long long pk = 1;
    for (size_t i = 0; i < k; ++i) pk *= p;
    for (int c = 0; c < at_least_k - at_least_k1; ++c) inv.divisors.push_back(pk);
  }
  if (inv.product() != ab.group->order())
    throw InternalError("abelian invariants do not multiply to |H^ab|");
  return inv;
}

AbelianInvariants abelian_invariants(const GroupRef& g) {
  return abelian_invariants(whole_group(g));
}

AbelianInvariants direct_sum(const AbelianInvariants& a, const AbelianInvariants& b) {
  AbelianInvariants out;
  out.divisors.resize(a.divisors.size() + b.divisors.size());
  std::merge(a.divisors.begin(), a.divisors.end(), b.divisors.begin(),
             b.divisors.end(), out.divisors.begin());
  return out;
}

}  // namespace pgl
