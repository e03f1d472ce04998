#pragma once

#include "pgl/quotient.hpp"

namespace pgl {

/// Elementary divisors of an abelian p-group as ascending prime powers.
struct AbelianInvariants {
  std::vector<long long> divisors;

  long long product() const;
  bool contains(long long v) const;
  std::string str() const;  // e.g. "[4, 4]"

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Invariants of H^ab, computed from the orders of the successive p-power
/// subgroups of the abelianization (p-layer ranks). Requires a p-group.
AbelianInvariants abelian_invariants(const Subgroup& h);
AbelianInvariants abelian_invariants(const GroupRef& g);

/// Invariants of a direct sum.
AbelianInvariants direct_sum(const AbelianInvariants& a, const AbelianInvariants& b);

}  // namespace pgl
