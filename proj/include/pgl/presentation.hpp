#pragma once

#include <span>
#include <string>
#include <vector>

#include "pgl/word.hpp"

namespace pgl {

/// Abstract presentation: named generators, freely reduced relator words,
/// and the prime used by downstream p-group predicates.
struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;
  int prime = 0;

  friend bool operator==(const Presentation&, const Presentation&) = default;

  /// Grammar text that parses back to an identical Presentation.
  std::string str() const;
};

/// Parse the presentation grammar:
///
///   file    := "gens:" namelist ";" "rels:" wordlist [";" "p:" integer]
///   name    := [A-Za-z][A-Za-z0-9_]*
///   word    := term+
///   term    := atom ["^" int]
///   atom    := name | "[" word ("," word)+ "]" | "(" word ")"
///
/// namelist and wordlist are comma-separated; whitespace separates tokens and
/// is otherwise insignificant. Names are lexed with maximal munch, so a
/// product of two generators is written "x y", not "xy". Commutators are
/// left-normed ([a,b,c] = [[a,b],c]) and expand via [a,b] = a^-1 b^-1 a b.
/// Relators are freely reduced; relators that reduce to the empty word are
/// dropped. A zero exponent is an error.
///
/// When "p:" is omitted, the prime defaults to the smallest prime dividing
/// every order implied by a single-generator power relator (x^k implies the
/// order of x divides |k|); if there is no such common prime the text is
/// rejected.
Presentation parse_presentation(const std::string& text);

/// Expand one sugared word (e.g. "[x,y,y]^2 x^-1") over the given generator
/// names into a freely reduced Word.
Word parse_word(const std::string& text, std::span<const std::string> names);

}  // namespace pgl
