#include "kirk/word.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <set>

namespace kirk {

namespace {

void validate_letter(int arity, int excluded, const Letter& l) {
  if (l.generator < 1 || l.generator > arity)
    throw InvalidInput("generator x" + std::to_string(l.generator) +
                       " outside x1..x" + std::to_string(arity));
  if (l.generator == excluded)
    throw InvalidInput("generator x" + std::to_string(l.generator) +
                       " is the excluded generator");
  if (l.sign != 1 && l.sign != -1) throw InvalidInput("letter sign must be ±1");
}

}  // namespace

// -------------------------------------------------------------------- Word

Word::Word(int arity, int excluded) : arity_(arity), excluded_(excluded) {
  validate_ring(arity, excluded);
}

Word::Word(int arity, int excluded, std::vector<Letter> letters)
    : Word(arity, excluded) {
  for (const Letter& l : letters) validate_letter(arity, excluded, l);
  letters_ = std::move(letters);
}

bool Word::uses(int j) const noexcept {
  return std::any_of(letters_.begin(), letters_.end(),
                     [j](const Letter& l) { return l.generator == j; });
}

Word Word::inverse() const {
  Word r(arity_, excluded_);
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    r.letters_.push_back(it->inverse());
  return r;
}

Word Word::free_reduced() const {
  Word r(arity_, excluded_);
  for (const Letter& l : letters_) {
    if (!r.letters_.empty() && r.letters_.back() == l.inverse())
      r.letters_.pop_back();
    else
      r.letters_.push_back(l);
  }
  return r;
}

Word& Word::operator*=(const Word& other) {
  if (arity_ != other.arity_ || excluded_ != other.excluded_)
    throw ArityMismatch("words live in different groups");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word Word::conjugated_by(const Word& b) const { return b.inverse() * *this * b; }

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) s += ' ';
    s += "x" + std::to_string(letters_[k].generator);
    if (letters_[k].sign < 0) s += "^-1";
  }
  return s;
}

Word operator*(Word a, const Word& b) { return a *= b; }

Word commutator(const Word& a, const Word& b) {
  return a.inverse() * b.inverse() * a * b;
}

// ---------------------------------------------------------------- WordExpr

WordExpr::WordExpr() : node_(std::make_shared<const Node>(Identity{})) {}
WordExpr::WordExpr(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

WordExpr WordExpr::gen(int j) { return WordExpr(Generator{j}); }
WordExpr WordExpr::inverse(WordExpr base) { return WordExpr(Inverse{std::move(base)}); }
WordExpr WordExpr::power(WordExpr base, int k) { return WordExpr(Power{std::move(base), k}); }
WordExpr WordExpr::conjugate(WordExpr base, WordExpr by) {
  return WordExpr(Conjugate{std::move(base), std::move(by)});
}
WordExpr WordExpr::commutator(WordExpr a, WordExpr b) {
  return WordExpr(Commutator{std::move(a), std::move(b)});
}

WordExpr WordExpr::letter(int j, int sign) {
  return sign > 0 ? gen(j) : power(gen(j), -1);
}

WordExpr WordExpr::product(std::vector<WordExpr> factors) {
  if (factors.empty()) return identity();
  if (factors.size() == 1) return factors.front();
  return WordExpr(Product{std::move(factors)});
}

WordExpr WordExpr::from_word(const Word& w) {
  std::vector<WordExpr> factors;
  for (const Letter& l : w.letters()) factors.push_back(letter(l.generator, l.sign));
  return product(std::move(factors));
}

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

void collect_generators(const WordExpr& e, std::set<int>& out) {
  std::visit(Overloaded{
                 [](const WordExpr::Identity&) {},
                 [&](const WordExpr::Generator& g) { out.insert(g.index); },
                 [&](const WordExpr::Product& p) {
                   for (const auto& f : p.factors) collect_generators(f, out);
                 },
                 [&](const WordExpr::Inverse& v) { collect_generators(v.base, out); },
                 [&](const WordExpr::Power& p) { collect_generators(p.base, out); },
                 [&](const WordExpr::Conjugate& c) {
                   collect_generators(c.base, out);
                   collect_generators(c.by, out);
                 },
                 [&](const WordExpr::Commutator& c) {
                   collect_generators(c.left, out);
                   collect_generators(c.right, out);
                 },
             },
             e.node());
}

}  // namespace

std::vector<int> WordExpr::generators() const {
  std::set<int> s;
  collect_generators(*this, s);
  return {s.begin(), s.end()};
}

bool WordExpr::uses(int j) const {
  auto g = generators();
  return std::binary_search(g.begin(), g.end(), j);
}

Word WordExpr::flatten(int arity, int excluded) const {
  return std::visit(
      Overloaded{
          [&](const Identity&) { return Word(arity, excluded); },
          [&](const Generator& g) { return Word::generator(arity, excluded, g.index); },
          [&](const Product& p) {
            Word w(arity, excluded);
            for (const auto& f : p.factors) w *= f.flatten(arity, excluded);
            return w;
          },
          [&](const Inverse& v) { return v.base.flatten(arity, excluded).inverse(); },
          [&](const Power& p) {
            Word base = p.base.flatten(arity, excluded);
            if (p.exponent < 0) base = base.inverse();
            Word w(arity, excluded);
            const long reps = p.exponent < 0 ? -static_cast<long>(p.exponent)
                                             : static_cast<long>(p.exponent);
            for (long k = 0; k < reps; ++k) w *= base;
            return w;
          },
          [&](const Conjugate& c) {
            return c.base.flatten(arity, excluded)
                .conjugated_by(c.by.flatten(arity, excluded));
          },
          [&](const Commutator& c) {
            return kirk::commutator(c.left.flatten(arity, excluded),
                                    c.right.flatten(arity, excluded));
          },
      },
      node());
}

namespace {

bool is_atom(const WordExpr& e) {
  return std::holds_alternative<WordExpr::Generator>(e.node()) ||
         std::holds_alternative<WordExpr::Commutator>(e.node());
}

std::string as_atom(const WordExpr& e) {
  if (is_atom(e)) return e.to_string();
  return "(" + e.to_string() + ")";
}

}  // namespace

std::string WordExpr::to_string() const {
  return std::visit(
      Overloaded{
          [](const Identity&) -> std::string { return "1"; },
          [](const Generator& g) { return "x" + std::to_string(g.index); },
          [](const Product& p) {
            std::string s;
            for (std::size_t k = 0; k < p.factors.size(); ++k) {
              if (k) s += ' ';
              const auto& f = p.factors[k];
              // A nested product or identity reads back the same inside parentheses.
              if (std::holds_alternative<Product>(f.node()) ||
                  std::holds_alternative<Identity>(f.node()))
                s += "(" + f.to_string() + ")";
              else
                s += f.to_string();
            }
            return s;
          },
          [](const Inverse& v) { return as_atom(v.base) + "^-1"; },
          [](const Power& p) { return as_atom(p.base) + "^" + std::to_string(p.exponent); },
          [](const Conjugate& c) { return as_atom(c.base) + "^" + as_atom(c.by); },
          [](const Commutator& c) {
            return "[" + c.left.to_string() + "," + c.right.to_string() + "]";
          },
      },
      node());
}

// ------------------------------------------------------------------ parser

namespace {

class WordParser {
 public:
  explicit WordParser(const std::string& text) : text_(text) {}

  WordExpr run() {
    skip();
    if (at_end()) return WordExpr::identity();
    if (peek() == '1') {
      std::size_t save = pos_;
      ++pos_;
      skip();
      if (at_end()) return WordExpr::identity();
      pos_ = save;
    }
    WordExpr w = word();
    skip();
    if (!at_end()) throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
    return w;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (at_end() || peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool starts_atom() {
    skip();
    return !at_end() && (peek() == 'x' || peek() == '1' || peek() == '(' || peek() == '[');
  }

  WordExpr word() {
    std::vector<WordExpr> factors;
    if (!starts_atom()) throw ParseError("expected a generator, '1', '(' or '['", pos_);
    while (starts_atom()) factors.push_back(factor());
    return WordExpr::product(std::move(factors));
  }

  WordExpr factor() {
    WordExpr base = atom();
    skip();
    if (at_end() || peek() != '^') return base;
    ++pos_;
    skip();
    if (!at_end() && (peek() == '-' || peek() == '+' ||
                      std::isdigit(static_cast<unsigned char>(peek())))) {
      const std::size_t at = pos_;
      int sign = 1;
      if (peek() == '-' || peek() == '+') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      }
      const long k = integer();
      if (k > INT_MAX) throw ParseError("exponent too large", at);
      const int e = sign * static_cast<int>(k);
      if (e == -1) return WordExpr::inverse(std::move(base));
      return WordExpr::power(std::move(base), e);
    }
    if (!starts_atom()) throw ParseError("expected exponent", pos_);
    return WordExpr::conjugate(std::move(base), atom());
  }

  WordExpr atom() {
    skip();
    const std::size_t at = pos_;
    const char c = peek();
    ++pos_;
    if (c == 'x') {
      const long j = integer();
      if (j < 1 || j > kMaxArity)
        throw ParseError("generator index " + std::to_string(j) + " out of range", at);
      return WordExpr::gen(static_cast<int>(j));
    }
    if (c == '1') return WordExpr::identity();
    if (c == '(') {
      WordExpr w = word();
      expect(')');
      return w;
    }
    WordExpr a = word();
    expect(',');
    WordExpr b = word();
    expect(']');
    return WordExpr::commutator(std::move(a), std::move(b));
  }

  long integer() {
    const std::size_t start = pos_;
    long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > INT_MAX) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer", pos_);
    return v;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

// Error with the position of the first offending generator in the text.
void validate_generators(const std::string& text, int arity, int excluded) {
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] != 'x') continue;
    std::size_t end = k + 1;
    int j = 0;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
      j = j * 10 + (text[end++] - '0');
    if (j > arity)
      throw ParseError("generator x" + std::to_string(j) + " outside x1..x" +
                           std::to_string(arity),
                       k);
    if (j == excluded)
      throw ParseError("generator x" + std::to_string(j) +
                           " is the excluded generator",
                       k);
  }
}

}  // namespace

WordExpr parse_word_expr(const std::string& text) { return WordParser(text).run(); }

WordExpr parse_word(const std::string& text, int arity, int excluded) {
  validate_ring(arity, excluded);
  WordExpr e = parse_word_expr(text);
  validate_generators(text, arity, excluded);
  return e;
}

WordExpr nested_commutator(const std::vector<int>& indices) {
  if (indices.empty()) throw InvalidInput("nested commutator needs an index");
  WordExpr acc = WordExpr::gen(indices.back());
  for (auto it = indices.rbegin() + 1; it != indices.rend(); ++it)
    acc = WordExpr::commutator(WordExpr::gen(*it), acc);
  return acc;
}

// ------------------------------------------------------------ Magnus / RF

Polynomial magnus_expand(const Word& w) {
  Polynomial p = Polynomial::one(w.arity(), w.excluded());
  for (const Letter& l : w.letters()) p = p.times_letter(l.generator, l.sign);
  return p;
}

bool rf_equal(const Word& u, const Word& v) {
  if (u.arity() != v.arity() || u.excluded() != v.excluded())
    throw ArityMismatch("words live in different groups");
  return magnus_expand(u) == magnus_expand(v);
}

bool is_positive(const Word& w) {
  auto lead = leading_term(magnus_expand(w));
  return !lead || lead->coeff > 0;
}

Normalized positive_normalize(const Word& w) {
  if (is_positive(w)) return {w, false};
  return {w.inverse(), true};
}

Word substitute_generator(const Word& w, int j, const Word& g) {
  if (w.arity() != g.arity() || w.excluded() != g.excluded())
    throw ArityMismatch("substitution word lives in a different group");
  const Word xj = Word::generator(w.arity(), w.excluded(), j);
  const Word image = xj.conjugated_by(g);
  const Word image_inv = image.inverse();
  Word out(w.arity(), w.excluded());
  for (const Letter& l : w.letters()) {
    if (l.generator != j)
      out *= Word(w.arity(), w.excluded(), {l});
    else
      out *= l.sign > 0 ? image : image_inv;
  }
  return out;
}

}  // namespace kirk
