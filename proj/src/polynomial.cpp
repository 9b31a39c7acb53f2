#include "kirk/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace kirk {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::from_indices(std::span<const int> indices) {
  if (indices.size() > static_cast<std::size_t>(kMaxArity - 1))
    throw InvalidInput("monomial has too many indices");
  Monomial m;
  int k = 0;
  for (int j : indices) {
    if (j < 1 || j > kMaxArity)
      throw InvalidInput("index " + std::to_string(j) + " out of range");
    if (m.contains(j))
      throw InvalidInput("index " + std::to_string(j) + " repeated");
    m.code_ |= static_cast<std::uint64_t>(j) << (52 - 4 * k);
    m.mask_ |= static_cast<std::uint16_t>(1U << j);
    ++k;
  }
  m.code_ |= static_cast<std::uint64_t>(k) << 60;
  return m;
}

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  out.reserve(degree());
  for (int k = 0; k < degree(); ++k) out.push_back(index(k));
  return out;
}

std::optional<Monomial> Monomial::concat(const Monomial& a, const Monomial& b) {
  if (a.mask_ & b.mask_) return std::nullopt;
  Monomial m;
  const int da = a.degree();
  const int db = b.degree();
  m.code_ = (static_cast<std::uint64_t>(da + db) << 60) |
            (a.code_ & kIndexBits) | ((b.code_ & kIndexBits) >> (4 * da));
  m.mask_ = a.mask_ | b.mask_;
  return m;
}

Monomial Monomial::append(int j) const {
  Monomial m;
  const int d = degree();
  m.code_ = (static_cast<std::uint64_t>(d + 1) << 60) | (code_ & kIndexBits) |
            (static_cast<std::uint64_t>(j) << (52 - 4 * d));
  m.mask_ = mask_ | static_cast<std::uint16_t>(1U << j);
  return m;
}

std::string Monomial::to_string() const {
  if (degree() == 0) return "1";
  std::string s;
  for (int k = 0; k < degree(); ++k) s += "X" + std::to_string(index(k));
  return s;
}

// -------------------------------------------------------------- validation

void validate_ring(int arity, int excluded) {
  if (arity < 1 || arity > kMaxArity)
    throw InvalidInput("arity " + std::to_string(arity) + " outside 1.." +
                       std::to_string(kMaxArity));
  if (excluded < 1 || excluded > arity)
    throw InvalidInput("excluded index " + std::to_string(excluded) +
                       " outside 1.." + std::to_string(arity));
}

void validate_sequence(int arity, int excluded, std::span<const int> sequence) {
  std::uint32_t seen = 0;
  for (int j : sequence) {
    if (j < 1 || j > arity)
      throw InvalidInput("sequence index " + std::to_string(j) +
                         " outside 1.." + std::to_string(arity));
    if (j == excluded)
      throw InvalidInput("sequence contains the excluded index " +
                         std::to_string(j));
    if (seen & (1U << j))
      throw InvalidInput("sequence repeats index " + std::to_string(j));
    seen |= 1U << j;
  }
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(int arity, int excluded)
    : arity_(arity), excluded_(excluded) {
  validate_ring(arity, excluded);
}

Polynomial Polynomial::constant(int arity, int excluded, Coeff c) {
  Polynomial p(arity, excluded);
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(int arity, int excluded, int j) {
  Polynomial p(arity, excluded);
  const int idx[] = {j};
  p.terms_.push_back({p.checked_monomial(idx), 1});
  return p;
}

Polynomial Polynomial::from_terms(
    int arity, int excluded,
    std::vector<std::pair<std::vector<int>, Coeff>> terms) {
  Polynomial p(arity, excluded);
  for (auto& [indices, c] : terms)
    p.terms_.push_back({p.checked_monomial(indices), c});
  p.normalize();
  return p;
}

bool Polynomial::admits(const Monomial& m) const noexcept {
  if (m.contains(excluded_)) return false;
  return (m.mask() >> (arity_ + 1)) == 0;
}

Monomial Polynomial::checked_monomial(std::span<const int> sequence) const {
  validate_sequence(arity_, excluded_, sequence);
  return Monomial::from_indices(sequence);
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return t.monomial < key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

Coeff Polynomial::coefficient(std::span<const int> sequence) const {
  return coefficient(checked_monomial(sequence));
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  std::size_t out = 0;
  for (std::size_t k = 0; k < terms_.size();) {
    Term acc = terms_[k++];
    while (k < terms_.size() && terms_[k].monomial == acc.monomial)
      acc.coeff = checked_add(acc.coeff, terms_[k++].coeff);
    if (acc.coeff != 0) terms_[out++] = acc;
  }
  terms_.resize(out);
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.arity() != b.arity() || a.excluded() != b.excluded())
    throw ArityMismatch("polynomials live in different rings: (n=" +
                        std::to_string(a.arity()) + ", i=" +
                        std::to_string(a.excluded()) + ") vs (n=" +
                        std::to_string(b.arity()) + ", i=" +
                        std::to_string(b.excluded()) + ")");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = checked_sub(0, t.coeff);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(*this, other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() ||
        (a != terms_.end() && a->monomial < b->monomial)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->monomial < a->monomial) {
      merged.push_back(*b++);
    } else {
      Coeff c = checked_add(a->coeff, b->coeff);
      if (c != 0) merged.push_back({a->monomial, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  return *this += -other;
}

Polynomial Polynomial::scaled(Coeff factor) const {
  if (factor == 0) return Polynomial(arity_, excluded_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = checked_mul(t.coeff, factor);
  return r;
}

Polynomial Polynomial::times_letter(int j, int sign) const {
  Polynomial r = *this;
  for (const Term& t : terms_)
    if (!t.monomial.contains(j))
      r.terms_.push_back({t.monomial.append(j), sign > 0 ? t.coeff : checked_sub(0, t.coeff)});
  r.normalize();
  return r;
}

Polynomial Polynomial::letter_times(int j, int sign) const {
  Polynomial r = *this;
  const int idx[] = {j};
  const Monomial xj = Monomial::from_indices(idx);
  for (const Term& t : terms_)
    if (auto m = Monomial::concat(xj, t.monomial))
      r.terms_.push_back({*m, sign > 0 ? t.coeff : checked_sub(0, t.coeff)});
  r.normalize();
  return r;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  Polynomial r(a.arity(), a.excluded());
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_)
      if (auto m = Monomial::concat(s.monomial, t.monomial))
        r.terms_.push_back({*m, checked_mul(s.coeff, t.coeff)});
  r.normalize();
  return r;
}

std::strong_ordering operator<=>(const Polynomial& a,
                                 const Polynomial& b) noexcept {
  if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
  if (auto c = a.excluded_ <=> b.excluded_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end());
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const Term& t : terms_) {
    Coeff mag = t.coeff < 0 ? -t.coeff : t.coeff;
    if (first) {
      if (t.coeff < 0) s += "-";
    } else {
      s += t.coeff < 0 ? " - " : " + ";
    }
    first = false;
    if (t.monomial.degree() == 0) {
      s += std::to_string(mag);
    } else {
      if (mag != 1) s += std::to_string(mag);
      s += t.monomial.to_string();
    }
  }
  return s;
}

// ------------------------------------------------------------- free functions

std::optional<Term> leading_term(const Polynomial& p) {
  for (const Term& t : p.terms())
    if (t.monomial.degree() > 0) return t;
  return std::nullopt;
}

Polynomial substitute(const Polynomial& p, int j, const Polynomial& u) {
  require_same_ring(p, u);
  if (j < 1 || j > p.arity())
    throw InvalidInput("substitution index " + std::to_string(j) +
                       " out of range");
  if (j == p.excluded())
    throw InvalidInput("cannot substitute the excluded variable X" +
                       std::to_string(j));
  if (u.constant_term() != 0)
    throw InvalidInput("substitution polynomial must have zero constant term");

  const int n = p.arity();
  const int i = p.excluded();
  const Polynomial xj = Polynomial::variable(n, i, j);
  const Polynomial replacement = xj + xj * u - u * xj;

  Polynomial result(n, i);
  for (const Term& t : p.terms()) {
    if (!t.monomial.contains(j)) {
      result += Polynomial::from_terms(n, i, {{t.monomial.indices(), t.coeff}});
      continue;
    }
    auto idx = t.monomial.indices();
    auto pos = std::find(idx.begin(), idx.end(), j) - idx.begin();
    std::vector<int> prefix(idx.begin(), idx.begin() + pos);
    std::vector<int> suffix(idx.begin() + pos + 1, idx.end());
    Polynomial left = Polynomial::from_terms(n, i, {{prefix, t.coeff}});
    Polynomial right = Polynomial::from_terms(n, i, {{suffix, 1}});
    result += left * replacement * right;
  }
  return result;
}

Polynomial unit_inverse(const Polynomial& unit) {
  if (unit.constant_term() != 1)
    throw InvalidInput("unit_inverse expects constant term 1");
  const int n = unit.arity();
  const int i = unit.excluded();
  const Polynomial u = unit - Polynomial::one(n, i);
  // (1+U)^{-1} = 1 - U + U^2 - ...; U^k vanishes once k exceeds n-1.
  Polynomial result = Polynomial::one(n, i);
  Polynomial power = Polynomial::one(n, i);
  for (int k = 1; k < n; ++k) {
    power = power * (-u);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

Residue Residue::make(Coeff value, Coeff modulus) {
  if (modulus < 0) throw InvalidInput("negative modulus");
  if (modulus == 0) return {value, 0};
  Coeff r = value % modulus;
  if (r < 0) r += modulus;
  return {r, modulus};
}

std::string Residue::to_string() const {
  if (modulus == 0) return std::to_string(value);
  return std::to_string(value) + " mod " + std::to_string(modulus);
}

Coeff indeterminacy(const Polynomial& p, std::span<const int> sequence) {
  validate_sequence(p.arity(), p.excluded(), sequence);
  const std::size_t k = sequence.size();
  Coeff g = 0;
  std::vector<int> sub;
  sub.reserve(k);
  // Bitmasks 1..2^k-2 select the nonempty proper subsequences.
  for (std::uint32_t bits = 1; bits + 1 < (std::uint32_t{1} << k); ++bits) {
    sub.clear();
    for (std::size_t b = 0; b < k; ++b)
      if (bits & (1U << b)) sub.push_back(sequence[b]);
    g = std::gcd(g, p.coefficient(Monomial::from_indices(sub)));
    if (g == 1) break;
  }
  return g;
}

Residue residue(const Polynomial& p, std::span<const int> sequence) {
  const Coeff modulus = indeterminacy(p, sequence);
  return Residue::make(p.coefficient(sequence), modulus);
}

std::vector<Monomial> all_monomials(int arity, int excluded,
                                    bool include_constant) {
  validate_ring(arity, excluded);
  std::vector<int> letters;
  for (int j = 1; j <= arity; ++j)
    if (j != excluded) letters.push_back(j);

  std::vector<Monomial> out;
  std::vector<Monomial> frontier{Monomial{}};
  if (include_constant) out.push_back(Monomial{});
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const Monomial& m : frontier)
      for (int j : letters)
        if (!m.contains(j)) next.push_back(m.append(j));
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::string sequence_to_string(std::span<const int> sequence) {
  const bool wide = std::any_of(sequence.begin(), sequence.end(),
                                [](int j) { return j >= 10; });
  std::string s;
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    if (wide && k > 0) s += ",";
    s += std::to_string(sequence[k]);
  }
  return s;
}

std::vector<int> parse_sequence(const std::string& text) {
  std::vector<int> out;
  if (text.find(',') == std::string::npos) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InvalidInput("bad sequence '" + text + "'");
      out.push_back(c - '0');
    }
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos)
        throw InvalidInput("bad sequence '" + text + "'");
    } catch (const std::logic_error&) {
      throw InvalidInput("bad sequence '" + text + "'");
    }
  }
  return out;
}

// ------------------------------------------------------------------ parsing

namespace {

class PolynomialParser {
 public:
  PolynomialParser(const std::string& text, int arity, int excluded)
      : text_(text), result_(arity, excluded) {}

  Polynomial run() {
    skip();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      parse_term(sign);
      skip();
    }
    return result_;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Coeff read_int() {
    const std::size_t start = pos_;
    Coeff v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      v = checked_add(checked_mul(v, 10), peek() - '0'), ++pos_;
    if (pos_ == start) throw ParseError("expected integer", pos_);
    return v;
  }

  void parse_term(int sign) {
    Coeff c = 1;
    bool has_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      c = read_int();
      has_coeff = true;
      skip();
      if (!at_end() && peek() == '*') ++pos_, skip();
    }
    std::vector<int> idx;
    while (!at_end() && (peek() == 'X' || peek() == 'x')) {
      const std::size_t at = pos_;
      ++pos_;
      Coeff j = read_int();
      if (j > kMaxArity) throw ParseError("variable index too large", at);
      idx.push_back(static_cast<int>(j));
      skip();
      if (!at_end() && peek() == '*') ++pos_, skip();
    }
    if (!has_coeff && idx.empty()) throw ParseError("expected term", pos_);
    result_ += Polynomial::from_terms(result_.arity(), result_.excluded(),
                                      {{idx, sign * c}});
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Polynomial result_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int arity, int excluded) {
  return PolynomialParser(text, arity, excluded).run();
}

}  // namespace kirk
