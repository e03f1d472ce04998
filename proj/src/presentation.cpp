#include "pgl/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "pgl/errors.hpp"

namespace pgl {

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct Token {
  enum class Kind { Name, Int, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  long long value = 0;  // for Int
  int offset = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    tok_.offset = static_cast<int>(pos_);
    if (pos_ >= src_.size()) {
      tok_ = {Token::Kind::End, "", 0, static_cast<int>(pos_)};
      return;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      tok_ = {Token::Kind::Name, src_.substr(start, pos_ - start), 0,
              static_cast<int>(start)};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      std::string digits = src_.substr(start, pos_ - start);
      if (digits.size() > 9)
        throw ParseError("integer literal too large", static_cast<int>(start));
      tok_ = {Token::Kind::Int, digits, std::stoll(digits), static_cast<int>(start)};
      return;
    }
    static const std::string punct = ":;,^[]()-";
    if (punct.find(c) != std::string::npos) {
      tok_ = {Token::Kind::Punct, std::string(1, c), 0, static_cast<int>(pos_)};
      ++pos_;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'",
                     static_cast<int>(pos_));
  }

  const std::string& src_;
  size_t pos_ = 0;
  Token tok_;
};

class Parser {
 public:
  Parser(const std::string& src, std::span<const std::string> names)
      : lex_(src), names_(names.begin(), names.end()) {}

  explicit Parser(const std::string& src) : lex_(src) {}

  Presentation parse_file() {
    expect_keyword("gens");
    expect_punct(":");
    Presentation pres;
    pres.generator_names.push_back(expect_name());
    while (peek_punct(",")) {
      lex_.take();
      pres.generator_names.push_back(expect_name());
    }
    for (size_t i = 0; i < pres.generator_names.size(); ++i)
      for (size_t j = i + 1; j < pres.generator_names.size(); ++j)
        if (pres.generator_names[i] == pres.generator_names[j])
          throw ParseError("duplicate generator name '" + pres.generator_names[i] + "'", 0);
    names_ = pres.generator_names;

    expect_punct(";");
    expect_keyword("rels");
    expect_punct(":");
    if (starts_word()) {
      push_relator(pres, parse_toplevel_word());
      while (peek_punct(",")) {
        lex_.take();
        push_relator(pres, parse_toplevel_word());
      }
    }

    std::optional<long long> given_p;
    if (peek_punct(";")) {
      lex_.take();
      Token t = lex_.take();
      if (t.kind != Token::Kind::Name || t.text != "p")
        throw ParseError("expected 'p' after ';'", t.offset);
      expect_punct(":");
      Token v = lex_.take();
      if (v.kind != Token::Kind::Int)
        throw ParseError("expected integer prime", v.offset);
      if (!is_prime(v.value))
        throw ParseError("p must be prime, got " + v.text, v.offset);
      given_p = v.value;
    }
    Token end = lex_.take();
    if (end.kind != Token::Kind::End)
      throw ParseError("trailing input after presentation", end.offset);

    pres.prime = given_p ? static_cast<int>(*given_p) : infer_prime(pres);
    return pres;
  }

  Word parse_single_word() {
    Word w = parse_toplevel_word();
    Token end = lex_.take();
    if (end.kind != Token::Kind::End)
      throw ParseError("trailing input after word", end.offset);
    return w;
  }

 private:
  void push_relator(Presentation& pres, Word w) {
    if (!w.empty()) pres.relators.push_back(std::move(w));  // vacuous relators dropped
  }

  static int infer_prime(const Presentation& pres) {
    // Implied orders come from single-syllable relators x^k.
    std::vector<long long> orders;
    for (const Word& w : pres.relators)
      if (w.length() == 1) orders.push_back(std::llabs(w.factors()[0].exp));
    if (orders.empty())
      throw ParseError("cannot infer p: no single-generator power relator; add '; p: N'", 0);
    long long mn = *std::min_element(orders.begin(), orders.end());
    for (long long q = 2; q <= mn; ++q) {
      if (!is_prime(q)) continue;
      bool all = std::all_of(orders.begin(), orders.end(),
                             [q](long long k) { return k % q == 0; });
      if (all) return static_cast<int>(q);
    }
    throw ParseError("cannot infer p: implied element orders share no prime; add '; p: N'", 0);
  }

  bool starts_word() const {
    const Token& t = lex_.peek();
    return t.kind == Token::Kind::Name ||
           (t.kind == Token::Kind::Punct && (t.text == "[" || t.text == "("));
  }

  Word parse_toplevel_word() {
    Word w = parse_term();
    while (starts_word()) w = w * parse_term();
    return w;
  }

  Word parse_term() {
    Word atom = parse_atom();
    if (peek_punct("^")) {
      lex_.take();
      int e = parse_exponent();
      return atom.pow(e);
    }
    return atom;
  }

  int parse_exponent() {
    bool neg = false;
    if (peek_punct("-")) {
      lex_.take();
      neg = true;
    }
    Token t = lex_.take();
    if (t.kind != Token::Kind::Int)
      throw ParseError("expected integer exponent", t.offset);
    if (t.value == 0) throw ParseError("zero exponent", t.offset);
    return static_cast<int>(neg ? -t.value : t.value);
  }

  Word parse_atom() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Name) {
      Token name = lex_.take();
      return Word::generator(resolve(name));
    }
    if (t.kind == Token::Kind::Punct && t.text == "(") {
      lex_.take();
      Word w = parse_toplevel_word();
      expect_punct(")");
      return w;
    }
    if (t.kind == Token::Kind::Punct && t.text == "[") {
      lex_.take();
      Word acc = parse_toplevel_word();
      expect_punct(",");
      acc = commutator(acc, parse_toplevel_word());
      while (peek_punct(",")) {
        lex_.take();
        acc = commutator(acc, parse_toplevel_word());  // left-normed
      }
      expect_punct("]");
      return acc;
    }
    throw ParseError("expected a word", t.offset);
  }

  int resolve(const Token& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name.text) return static_cast<int>(i);
    throw ParseError("unknown generator name '" + name.text + "'", name.offset);
  }

  bool peek_punct(const std::string& s) const {
    const Token& t = lex_.peek();
    return t.kind == Token::Kind::Punct && t.text == s;
  }

  void expect_punct(const std::string& s) {
    Token t = lex_.take();
    if (t.kind != Token::Kind::Punct || t.text != s)
      throw ParseError("expected '" + s + "'", t.offset);
  }

  void expect_keyword(const std::string& kw) {
    Token t = lex_.take();
    if (t.kind != Token::Kind::Name || t.text != kw)
      throw ParseError("expected '" + kw + ":'", t.offset);
  }

  std::string expect_name() {
    Token t = lex_.take();
    if (t.kind != Token::Kind::Name)
      throw ParseError("expected a name", t.offset);
    return t.text;
  }

  Lexer lex_;
  std::vector<std::string> names_;
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
  return Parser(text).parse_file();
}

Word parse_word(const std::string& text, std::span<const std::string> names) {
  return Parser(text, names).parse_single_word();
}

std::string Presentation::str() const {
  std::string out = "gens: ";
  for (size_t i = 0; i < generator_names.size(); ++i) {
    if (i) out += ", ";
    out += generator_names[i];
  }
  out += "; rels: ";
  for (size_t i = 0; i < relators.size(); ++i) {
    if (i) out += ", ";
    out += relators[i].str(generator_names);
  }
  out += "; p: " + std::to_string(prime);
  return out;
}

}  // namespace pgl
