#pragma once

// Exact arithmetic in the ring Λ_i: integer polynomials in non-commuting
// variables X_1..X_n, modulo monomials that contain X_i or repeat a variable.
// Every monomial is therefore a sequence of distinct indices, and the ring is
// finite-dimensional.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kirk/error.hpp"

namespace kirk {

inline constexpr int kMaxArity = 15;

// A non-repeating index sequence X_{i_1}..X_{i_k}, packed into one word:
// the top nibble holds the degree, then one nibble per index from the most
// significant end. Numeric order on the packed code is therefore
// degree-then-lexicographic order on sequences.
class Monomial {
 public:
  Monomial() = default;

  // Throws InvalidInput on repeated or out-of-range (1..kMaxArity) entries.
  static Monomial from_indices(std::span<const int> indices);

  int degree() const noexcept { return static_cast<int>(code_ >> 60); }
  int index(int k) const noexcept {
    return static_cast<int>((code_ >> (52 - 4 * k)) & 0xF);
  }
  std::vector<int> indices() const;
  std::uint16_t mask() const noexcept { return mask_; }
  bool contains(int j) const noexcept { return (mask_ >> j) & 1U; }
  std::uint64_t code() const noexcept { return code_; }

  // X_a X_b, or nullopt when the two share a variable.
  static std::optional<Monomial> concat(const Monomial& a, const Monomial& b);
  Monomial append(int j) const;  // caller guarantees !contains(j)

  std::string to_string() const;  // "X1X2", "1" for the constant monomial

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.code_ == b.code_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) noexcept {
    return a.code_ <=> b.code_;
  }

 private:
  static constexpr std::uint64_t kIndexBits = (std::uint64_t{1} << 56) - 1;
  std::uint64_t code_ = 0;
  std::uint16_t mask_ = 0;
};

struct Term {
  Monomial monomial;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

// Element of Λ_i. Terms are kept sorted by monomial with no zero
// coefficients, so equality is structural.
class Polynomial {
 public:
  Polynomial(int arity, int excluded);

  static Polynomial constant(int arity, int excluded, Coeff c);
  static Polynomial one(int arity, int excluded) {
    return constant(arity, excluded, 1);
  }
  static Polynomial variable(int arity, int excluded, int j);
  // Terms are validated, merged and pruned.
  static Polynomial from_terms(int arity, int excluded,
                               std::vector<std::pair<std::vector<int>, Coeff>> terms);

  int arity() const noexcept { return arity_; }
  int excluded() const noexcept { return excluded_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coeff coefficient(const Monomial& m) const;
  // κ_P(I). Throws InvalidInput if I is not a valid sequence for (n, i).
  Coeff coefficient(std::span<const int> sequence) const;
  Coeff constant_term() const { return coefficient(Monomial{}); }

  // Monomial valid for this ring: indices in 1..n, none equal to i.
  bool admits(const Monomial& m) const noexcept;
  Monomial checked_monomial(std::span<const int> sequence) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial scaled(Coeff factor) const;

  // P · (1 + sign·X_j), the Magnus factor of one letter.
  Polynomial times_letter(int j, int sign) const;
  // (1 + sign·X_j) · P
  Polynomial letter_times(int j, int sign) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    return a.arity_ == b.arity_ && a.excluded_ == b.excluded_ &&
           a.terms_ == b.terms_;
  }
  friend std::strong_ordering operator<=>(const Polynomial& a,
                                          const Polynomial& b) noexcept;

 private:
  friend Polynomial operator*(const Polynomial&, const Polynomial&);
  // Sorts, merges equal monomials and drops zeros.
  void normalize();

  int arity_;
  int excluded_;
  std::vector<Term> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

void require_same_ring(const Polynomial& a, const Polynomial& b);

// Minimal nonconstant monomial with nonzero coefficient.
std::optional<Term> leading_term(const Polynomial& p);

// Replace every X_j by X_j + X_j U - U X_j inside every monomial of p.
Polynomial substitute(const Polynomial& p, int j, const Polynomial& u);

// (1 + U)^{-1} for U without constant term; the series is finite.
Polynomial unit_inverse(const Polynomial& unit);

// Residue class of κ modulo D; modulus 0 keeps the integer as is.
struct Residue {
  Coeff value = 0;
  Coeff modulus = 0;

  static Residue make(Coeff value, Coeff modulus);
  std::string to_string() const;  // "3" or "1 mod 2"

  friend bool operator==(const Residue&, const Residue&) = default;
  friend auto operator<=>(const Residue&, const Residue&) = default;
};

// D_P(I): gcd of κ_P(J) over nonempty proper order-preserving subsequences J
// of I. The gcd of an empty or all-zero family is 0.
Coeff indeterminacy(const Polynomial& p, std::span<const int> sequence);
Residue residue(const Polynomial& p, std::span<const int> sequence);

void validate_ring(int arity, int excluded);
void validate_sequence(int arity, int excluded, std::span<const int> sequence);

// Every non-repeating sequence over {1..n}\{i}, in monomial order.
std::vector<Monomial> all_monomials(int arity, int excluded,
                                    bool include_constant = false);

// Inverse of Polynomial::to_string; accepts "2X1X3 - X2 + 1", "X1*X2", "0".
Polynomial parse_polynomial(const std::string& text, int arity, int excluded);

// Sequence helpers shared by reports: "123" when every index is a single
// digit, "10,11" otherwise; parse accepts either form.
std::string sequence_to_string(std::span<const int> sequence);
std::vector<int> parse_sequence(const std::string& text);

}  // namespace kirk
