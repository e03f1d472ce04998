#pragma once

#include <array>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pgl/word.hpp"

namespace pgl {

struct ValidationReport {
  bool ok = true;
  std::string failure;               // empty when ok
  std::array<int, 3> triple{-1, -1, -1};  // counterexample elements, when relevant
};

/// Fully materialized finite group on element indices 0..order-1, index 0
/// being the identity. Immutable after construction; share via GroupRef.
class ConcreteGroup {
 public:
  struct Data {
    int order = 0;
    std::vector<int> mul;                      // row-major order x order
    std::vector<int> generators;               // element indices
    int prime = 2;
    std::vector<Word> element_words;           // optional, one per element
    std::vector<std::string> generator_names;  // optional
    std::string name;                          // optional display name
  };

  /// Checks index ranges, the identity row/column, and two-sided inverses.
  /// Associativity and generator closure are checked by validate().
  static std::shared_ptr<const ConcreteGroup> create(Data data);

  static constexpr int identity = 0;

  int order() const { return n_; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int prime() const { return prime_; }
  bool is_p_group() const { return p_group_; }
  const std::vector<int>& generator_elements() const { return generators_; }
  bool has_element_words() const { return !element_words_.empty(); }
  const std::vector<Word>& element_words() const { return element_words_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  const std::string& name() const { return name_; }

  int power(int a, long long e) const;
  int conjugate(int a, int g) const;  // g^-1 a g
  int commutator(int a, int b) const;  // a^-1 b^-1 a b
  int element_order(int a) const;
  long long exponent() const;

  /// Evaluate a word at this group's generator elements.
  int evaluate(const Word& w) const;
  /// Evaluate a word at arbitrary images (one per abstract generator).
  int evaluate(const Word& w, std::span<const int> images) const;

  /// Exhaustive check of identity, inverses, associativity and generator
  /// closure. Associativity is a full triple scan up to exhaustive_cap
  /// elements; larger groups use Light's test over the generator set, which
  /// is equivalent given closure. Returns the first counterexample found.
  ValidationReport validate(int exhaustive_cap = 512) const;

  /// Witness word when available, otherwise "#k".
  std::string describe_element(int a) const;

 private:
  ConcreteGroup() = default;

  int n_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> generators_;
  int prime_ = 2;
  bool p_group_ = false;
  std::vector<Word> element_words_;
  std::vector<std::string> generator_names_;
  std::string name_;
};

using GroupRef = std::shared_ptr<const ConcreteGroup>;

/// Cyclic group of the given order with generator element 1.
GroupRef cyclic_group(int order, int prime, const std::string& name = "");

}  // namespace pgl
