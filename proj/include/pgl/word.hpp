#pragma once

#include <span>
#include <string>
#include <vector>

namespace pgl {

/// One syllable of a word: generator raised to a nonzero power.
struct Factor {
  int gen = 0;
  int exp = 0;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Freely reduced word over abstract generators. Adjacent syllables always
/// carry distinct generator indices; the empty word denotes the identity.
class Word {
 public:
  Word() = default;
  /// Reduces eagerly; syllables with zero exponent are dropped.
  explicit Word(std::vector<Factor> factors);

  static Word generator(int gen, int exp = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  /// Number of syllables (not letters).
  int length() const { return static_cast<int>(factors_.size()); }
  /// Largest generator index used, or -1 for the empty word.
  int max_generator() const;

  Word inverse() const;
  Word pow(int e) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

  /// Render with the given generator names, e.g. "x^-1 y x". Empty word -> "1".
  std::string str(std::span<const std::string> names) const;

 private:
  std::vector<Factor> factors_;
};

/// [a, b] = a^-1 b^-1 a b, freely reduced.
Word commutator(const Word& a, const Word& b);

}  // namespace pgl
