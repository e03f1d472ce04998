#include "pgl/word.hpp"

#include <algorithm>

#include "pgl/errors.hpp"

namespace pgl {

namespace {

// Stack-based free reduction: merge adjacent syllables with equal generator,
// drop the ones that cancel to exponent zero.
std::vector<Factor> reduce(const std::vector<Factor>& in) {
  std::vector<Factor> out;
  out.reserve(in.size());
  for (const Factor& f : in) {
    if (f.gen < 0) throw DomainError("negative generator index in word");
    if (f.exp == 0) continue;
    if (!out.empty() && out.back().gen == f.gen) {
      out.back().exp += f.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(f);
    }
  }
  return out;
}

}  // namespace

Word::Word(std::vector<Factor> factors) : factors_(reduce(factors)) {}

Word Word::generator(int gen, int exp) {
  return Word({{gen, exp}});
}

int Word::max_generator() const {
  int m = -1;
  for (const Factor& f : factors_) m = std::max(m, f.gen);
  return m;
}

Word Word::inverse() const {
  std::vector<Factor> rev;
  rev.reserve(factors_.size());
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
    rev.push_back({it->gen, -it->exp});
  Word w;
  w.factors_ = std::move(rev);  // reversal of a reduced word is reduced
  return w;
}

Word Word::pow(int e) const {
  if (e == 0) return Word();
  Word base = e > 0 ? *this : inverse();
  Word acc;
  for (int i = 0; i < std::abs(e); ++i) acc = acc * base;
  return acc;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Factor> cat = a.factors_;
  cat.insert(cat.end(), b.factors_.begin(), b.factors_.end());
  return Word(std::move(cat));
}

std::string Word::str(std::span<const std::string> names) const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const Factor& f : factors_) {
    if (!out.empty()) out += ' ';
    if (f.gen < static_cast<int>(names.size())) {
      out += names[f.gen];
    } else {
      out += 'g' + std::to_string(f.gen);
    }
    if (f.exp != 1) out += '^' + std::to_string(f.exp);
  }
  return out;
}

Word commutator(const Word& a, const Word& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace pgl
