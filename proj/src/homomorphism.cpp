#include "pgl/homomorphism.hpp"

#include <algorithm>
#include <map>

#include "pgl/abelian.hpp"
#include "pgl/errors.hpp"

namespace pgl {

bool Homomorphism::is_injective() const {
  std::vector<char> hit(target->order(), 0);
  for (int y : image) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

bool Homomorphism::is_surjective() const {
  std::vector<char> hit(target->order(), 0);
  int count = 0;
  for (int y : image)
    if (!hit[y]) {
      hit[y] = 1;
      ++count;
    }
  return count == target->order();
}

Subgroup Homomorphism::kernel() const {
  std::vector<int> elems;
  for (int x = 0; x < source->order(); ++x)
    if (image[x] == ConcreteGroup::identity) elems.push_back(x);
  return Subgroup::from_elements(source, elems, reduce_generators(source, elems));
}

Subgroup Homomorphism::image_subgroup() const {
  std::vector<int> elems = image;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return Subgroup::from_elements(target, elems, reduce_generators(target, elems));
}

std::optional<std::array<int, 2>> Homomorphism::find_violation() const {
  if (static_cast<int>(image.size()) != source->order())
    return std::array<int, 2>{-1, -1};
  if (image[ConcreteGroup::identity] != ConcreteGroup::identity)
    return std::array<int, 2>{0, 0};
  for (int a = 0; a < source->order(); ++a)
    for (int b = 0; b < source->order(); ++b)
      if (image[source->mul(a, b)] != target->mul(image[a], image[b]))
        return std::array<int, 2>{a, b};
  return std::nullopt;
}

void Homomorphism::require_valid(const std::string& context) const {
  if (auto v = find_violation())
    throw InternalError(context + ": map is not a homomorphism at (" +
                        std::to_string((*v)[0]) + ", " + std::to_string((*v)[1]) + ")");
}

Homomorphism identity_hom(const GroupRef& g) {
  Homomorphism h{g, g, std::vector<int>(g->order())};
  for (int i = 0; i < g->order(); ++i) h.image[i] = i;
  return h;
}

Homomorphism compose(const Homomorphism& second, const Homomorphism& first) {
  if (first.target != second.source)
    throw DomainError("composition mismatch: first.target != second.source");
  Homomorphism out{first.source, second.target, std::vector<int>(first.source->order())};
  for (int i = 0; i < first.source->order(); ++i)
    out.image[i] = second.image[first.image[i]];
  return out;
}

GeneratorImageResult hom_from_images(const GroupRef& g, const GroupRef& h,
                                     std::span<const int> gens,
                                     std::span<const int> images) {
  if (gens.size() != images.size())
    throw DomainError("one image required per generator (" +
                      std::to_string(gens.size()) + " generators, " +
                      std::to_string(images.size()) + " images)");
  for (int x : gens)
    if (x < 0 || x >= g->order()) throw DomainError("generator index out of range");
  for (int y : images)
    if (y < 0 || y >= h->order()) throw DomainError("image index out of range");

  // Breadth-first extension along the Cayley graph of g.
  std::vector<int> img(g->order(), -1);
  img[ConcreteGroup::identity] = ConcreteGroup::identity;
  std::vector<int> work{ConcreteGroup::identity};
  for (size_t i = 0; i < work.size(); ++i) {
    int x = work[i];
    for (size_t k = 0; k < gens.size(); ++k) {
      int y = g->mul(x, gens[k]);
      if (img[y] < 0) {
        img[y] = h->mul(img[x], images[k]);
        work.push_back(y);
      }
    }
  }
  if (static_cast<int>(work.size()) != g->order())
    throw DomainError("the given elements do not generate the source group");

  Homomorphism hom{g, h, std::move(img)};
  if (auto v = hom.find_violation())
    return {std::nullopt, (*v)[0], (*v)[1]};
  return {std::move(hom), -1, -1};
}

GeneratorImageResult hom_from_images(const GroupRef& g, const GroupRef& h,
                                     std::span<const int> images) {
  return hom_from_images(g, h, g->generator_elements(), images);
}

namespace {

struct Fingerprint {
  int order;
  long long exponent;
  std::map<int, int> order_census;
  int center_order;
  std::vector<int> lower_central_orders;
  std::vector<long long> abelian;  // of the abelianization, p-groups only

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const GroupRef& g) {
  Fingerprint f;
  f.order = g->order();
  f.exponent = g->exponent();
  for (int x = 0; x < g->order(); ++x) f.order_census[g->element_order(x)]++;
  f.center_order = center(g).order();
  for (const Subgroup& s : lower_central_series(whole_group(g)))
    f.lower_central_orders.push_back(s.order());
  if (g->is_p_group()) f.abelian = abelian_invariants(g).divisors;
  return f;
}

// Shared search skeleton for find/all isomorphisms.
class IsoSearch {
 public:
  IsoSearch(const GroupRef& g, const GroupRef& h,
            const std::function<bool(const Homomorphism&)>& visit)
      : g_(g), h_(h), visit_(visit) {}

  void run() {
    if (g_->order() != h_->order()) return;
    if (!(fingerprint(g_) == fingerprint(h_))) return;

    gens_ = g_->is_p_group() ? minimal_generators(whole_group(g_))
                             : reduce_generators(g_, whole_group(g_).elements());
    if (gens_.empty()) {  // trivial group
      if (h_->order() == 1)
        visit_(Homomorphism{g_, h_, {ConcreteGroup::identity}});
      return;
    }
    prefix_sizes_.clear();
    std::vector<int> prefix;
    for (int x : gens_) {
      prefix.push_back(x);
      prefix_sizes_.push_back(closure(g_, prefix).order());
    }

    // Candidates per generator: same element order, ascending (order, index).
    candidates_.resize(gens_.size());
    for (size_t k = 0; k < gens_.size(); ++k) {
      int want = g_->element_order(gens_[k]);
      for (int y = 0; y < h_->order(); ++y)
        if (h_->element_order(y) == want) candidates_[k].push_back(y);
    }

    chosen_.assign(gens_.size(), -1);
    dfs(0);
  }

 private:
  bool dfs(size_t depth) {
    if (depth == gens_.size()) {
      auto res = hom_from_images(g_, h_, gens_, chosen_);
      if (!res.hom || !res.hom->is_bijective()) return true;
      return visit_(*res.hom);
    }
    for (int y : candidates_[depth]) {
      chosen_[depth] = y;
      std::span<const int> prefix(chosen_.data(), depth + 1);
      if (closure(h_, prefix).order() != prefix_sizes_[depth]) continue;
      if (!dfs(depth + 1)) return false;
    }
    return true;
  }

  GroupRef g_, h_;
  const std::function<bool(const Homomorphism&)>& visit_;
  std::vector<int> gens_;
  std::vector<int> prefix_sizes_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> chosen_;
};

}  // namespace

void for_each_isomorphism(const GroupRef& g, const GroupRef& h,
                          const std::function<bool(const Homomorphism&)>& visit) {
  IsoSearch(g, h, visit).run();
}

std::optional<Homomorphism> find_isomorphism(const GroupRef& g, const GroupRef& h) {
  std::optional<Homomorphism> found;
  for_each_isomorphism(g, h, [&](const Homomorphism& iso) {
    found = iso;
    return false;
  });
  return found;
}

std::vector<Homomorphism> all_isomorphisms(const GroupRef& g, const GroupRef& h) {
  std::vector<Homomorphism> out;
  for_each_isomorphism(g, h, [&](const Homomorphism& iso) {
    out.push_back(iso);
    return true;
  });
  return out;
}

long long count_isomorphisms(const GroupRef& g, const GroupRef& h) {
  long long n = 0;
  for_each_isomorphism(g, h, [&](const Homomorphism&) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace pgl
