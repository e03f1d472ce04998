#include "pgl/product.hpp"

#include "pgl/errors.hpp"

namespace pgl {

ProductGroup direct_product(const GroupRef& g1, const GroupRef& g2, int max_order) {
  if (!g1 || !g2) throw DomainError("direct_product: null factor");
  if (g1->prime() != g2->prime())
    throw DomainError("direct_product: factors carry different primes (" +
                      std::to_string(g1->prime()) + " vs " +
                      std::to_string(g2->prime()) + ")");
  const long long n1 = g1->order(), n2 = g2->order();
  if (n1 * n2 > max_order)
    throw LimitError("product order " + std::to_string(n1 * n2) +
                     " exceeds max_order " + std::to_string(max_order));
  const int n = static_cast<int>(n1 * n2);

  ConcreteGroup::Data d;
  d.order = n;
  d.mul.resize(static_cast<size_t>(n) * n);
  for (int a1 = 0; a1 < n1; ++a1)
    for (int b1 = 0; b1 < n2; ++b1)
      for (int a2 = 0; a2 < n1; ++a2)
        for (int b2 = 0; b2 < n2; ++b2)
          d.mul[(a1 * n2 + b1) * static_cast<size_t>(n) + (a2 * n2 + b2)] =
              g1->mul(a1, a2) * static_cast<int>(n2) + g2->mul(b1, b2);
  for (int g : g1->generator_elements()) d.generators.push_back(g * static_cast<int>(n2));
  for (int g : g2->generator_elements()) d.generators.push_back(g);
  d.prime = g1->prime();
  if (!g1->name().empty() && !g2->name().empty())
    d.name = g1->name() + "x" + g2->name();

  ProductGroup p;
  p.group = ConcreteGroup::create(std::move(d));
  p.left = g1;
  p.right = g2;

  p.embed_left = {g1, p.group, std::vector<int>(g1->order())};
  for (int a = 0; a < n1; ++a) p.embed_left.image[a] = p.pair_index(a, 0);
  p.embed_right = {g2, p.group, std::vector<int>(g2->order())};
  for (int b = 0; b < n2; ++b) p.embed_right.image[b] = p.pair_index(0, b);
  p.proj_left = {p.group, g1, std::vector<int>(n)};
  p.proj_right = {p.group, g2, std::vector<int>(n)};
  for (int k = 0; k < n; ++k) {
    auto [a, b] = p.split(k);
    p.proj_left.image[k] = a;
    p.proj_right.image[k] = b;
  }
  p.embed_left.require_valid("product embedding (left)");
  p.embed_right.require_valid("product embedding (right)");
  p.proj_left.require_valid("product projection (left)");
  p.proj_right.require_valid("product projection (right)");
  return p;
}

}  // namespace pgl
