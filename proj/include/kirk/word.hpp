#pragma once

// Words in the reduced free group RF^i_{n-1} on x_1..x_n without x_i, their
// reduced Magnus expansion E_i, and positivity.
//
// Conventions: [a,b] = a^-1 b^-1 a b and a^b = b^-1 a b.

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "kirk/polynomial.hpp"

namespace kirk {

struct Letter {
  int generator = 0;
  int sign = 1;

  Letter inverse() const { return {generator, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

class Word {
 public:
  Word(int arity, int excluded);
  // Throws InvalidInput if a letter is out of range or equals x_i.
  Word(int arity, int excluded, std::vector<Letter> letters);

  static Word generator(int arity, int excluded, int j, int sign = 1) {
    return Word(arity, excluded, {Letter{j, sign}});
  }

  int arity() const noexcept { return arity_; }
  int excluded() const noexcept { return excluded_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  bool uses(int j) const noexcept;

  Word inverse() const;
  Word free_reduced() const;
  Word& operator*=(const Word& other);
  // b^-1 a b
  Word conjugated_by(const Word& b) const;

  // Letters in ascii form, "x1 x2^-1"; "1" for the empty word.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int arity_;
  int excluded_;
  std::vector<Letter> letters_;
};

Word operator*(Word a, const Word& b);
Word commutator(const Word& a, const Word& b);

// Structured expression as written by the user. Generators are stored
// unvalidated; flatten() checks them against a ring (n, i).
class WordExpr {
 public:
  struct Identity;
  struct Generator;
  struct Product;
  struct Inverse;
  struct Power;
  struct Conjugate;   // by^-1 base by
  struct Commutator;  // left^-1 right^-1 left right

  using Node = std::variant<Identity, Generator, Product, Inverse, Power,
                            Conjugate, Commutator>;

  WordExpr();
  explicit WordExpr(Node node);

  static WordExpr identity() { return WordExpr(); }
  static WordExpr gen(int j);
  static WordExpr letter(int j, int sign);
  static WordExpr product(std::vector<WordExpr> factors);
  static WordExpr inverse(WordExpr base);
  static WordExpr power(WordExpr base, int k);
  static WordExpr conjugate(WordExpr base, WordExpr by);
  static WordExpr commutator(WordExpr a, WordExpr b);
  static WordExpr from_word(const Word& w);

  const Node& node() const noexcept;

  // Generators appearing anywhere in the expression.
  std::vector<int> generators() const;
  bool uses(int j) const;

  // Throws InvalidInput when a generator is out of range or equals x_i.
  Word flatten(int arity, int excluded) const;

  // Canonical text accepted by parse_word_expr.
  std::string to_string() const;

 private:
  std::shared_ptr<const Node> node_;
};

struct WordExpr::Identity {};
struct WordExpr::Generator { int index; };
struct WordExpr::Product { std::vector<WordExpr> factors; };
struct WordExpr::Inverse { WordExpr base; };
struct WordExpr::Power { WordExpr base; int exponent; };
struct WordExpr::Conjugate { WordExpr base; WordExpr by; };
struct WordExpr::Commutator { WordExpr left; WordExpr right; };

inline const WordExpr::Node& WordExpr::node() const noexcept { return *node_; }

// Grammar (whitespace-insensitive):
//   word     := factor { factor }      (empty text or "1" is the identity)
//   factor   := atom [ '^' exponent ]
//   atom     := 'x' INT | '1' | '(' word ')' | '[' word ',' word ']'
//   exponent := SIGNED_INT | atom
WordExpr parse_word_expr(const std::string& text);
// Parse and validate against (n, i).
WordExpr parse_word(const std::string& text, int arity, int excluded);

// [x_{a1},[x_{a2},...[x_{a(k-1)},x_{ak}]...]]; a single index gives x_{a1}.
WordExpr nested_commutator(const std::vector<int>& indices);

Polynomial magnus_expand(const Word& w);
bool rf_equal(const Word& u, const Word& v);
bool is_positive(const Word& w);

struct Normalized {
  Word word;
  bool inverted = false;
};
Normalized positive_normalize(const Word& w);

// x_j^{±1} -> (g^-1 x_j g)^{±1} for every occurrence.
Word substitute_generator(const Word& w, int j, const Word& g);

}  // namespace kirk
