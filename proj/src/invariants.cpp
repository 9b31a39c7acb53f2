#include "kirk/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace kirk {

// ----------------------------------------------------- LinkMapPresentation

LinkMapPresentation::LinkMapPresentation(int n) {
  if (n < 2 || n > kMaxArity)
    throw InvalidInput("component count " + std::to_string(n) + " outside 2.." +
                       std::to_string(kMaxArity));
  components_.resize(n);
}

void LinkMapPresentation::check_index(int i) const {
  if (i < 1 || i > n())
    throw InvalidInput("component " + std::to_string(i) + " outside 1.." +
                       std::to_string(n()));
}

const std::vector<Singularity>& LinkMapPresentation::component(int i) const {
  check_index(i);
  return components_[i - 1];
}

std::vector<Singularity>& LinkMapPresentation::component(int i) {
  check_index(i);
  return components_[i - 1];
}

void LinkMapPresentation::add(int i, int sign, WordExpr word) {
  check_index(i);
  if (sign != 1 && sign != -1) throw InvalidInput("singularity sign must be ±1");
  word.flatten(n(), i);
  components_[i - 1].push_back({sign, std::move(word)});
}

void LinkMapPresentation::add(int i, int sign, const std::string& word) {
  check_index(i);
  add(i, sign, parse_word(word, n(), i));
}

void LinkMapPresentation::validate() const {
  for (int i = 1; i <= n(); ++i)
    for (const Singularity& s : components_[i - 1]) {
      if (s.sign != 1 && s.sign != -1)
        throw InvalidInput("singularity sign must be ±1");
      s.word.flatten(n(), i);
    }
}

std::vector<NormalizedSingularity> normalize_component(
    const LinkMapPresentation& p, int i) {
  std::vector<NormalizedSingularity> out;
  for (const Singularity& s : p.component(i)) {
    Word w = s.word.flatten(p.n(), i);
    Normalized norm = positive_normalize(w);
    out.push_back({s.sign, std::move(w), std::move(norm.word), norm.inverted});
  }
  return out;
}

// -------------------------------------------------------- GroupRingElement

void GroupRingElement::add(const Word& positive_word, Coeff rho) {
  if (rho == 0) return;
  Polynomial key = magnus_expand(positive_word);
  if (key == Polynomial::one(n_, i_)) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), key,
      [](const GroupRingTerm& t, const Polynomial& k) { return t.key < k; });
  if (it != terms_.end() && it->key == key) {
    it->rho = checked_add(it->rho, rho);
    if (it->rho == 0) terms_.erase(it);
    return;
  }
  terms_.insert(it, GroupRingTerm{std::move(key), rho, positive_word});
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.n_ != b.n_ || a.i_ != b.i_ || a.terms_.size() != b.terms_.size())
    return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].key != b.terms_[k].key || a.terms_[k].rho != b.terms_[k].rho)
      return false;
  return true;
}

GroupRingElement s_invariant(const LinkMapPresentation& p, int i) {
  GroupRingElement s(p.n(), i);
  for (const auto& entry : normalize_component(p, i)) s.add(entry.positive, entry.sign);
  return s;
}

namespace {

Polynomial e_of(const GroupRingElement& s) {
  const Polynomial one = Polynomial::one(s.arity(), s.excluded());
  Polynomial e(s.arity(), s.excluded());
  for (const auto& t : s.terms()) e += (t.key - one).scaled(t.rho);
  return e;
}

// D and κ for a monomial already known to be valid in p's ring.
Residue residue_of(const Polynomial& p, const Monomial& m) {
  const int k = m.degree();
  Coeff g = 0;
  int sub[kMaxArity];
  for (std::uint32_t bits = 1; bits + 1 < (std::uint32_t{1} << k); ++bits) {
    int len = 0;
    for (int b = 0; b < k; ++b)
      if (bits & (1U << b)) sub[len++] = m.index(b);
    g = std::gcd(g, p.coefficient(Monomial::from_indices({sub, sub + len})));
    if (g == 1) break;
  }
  return Residue::make(p.coefficient(m), g);
}

}  // namespace

Polynomial e_invariant(const LinkMapPresentation& p, int i) {
  return e_of(s_invariant(p, i));
}

Residue kappa_tilde(const LinkMapPresentation& p, int i,
                    std::span<const int> sequence) {
  validate_sequence(p.n(), i, sequence);
  return residue(e_invariant(p, i), sequence);
}

// ------------------------------------------------------------------ K sets

Residue KEntry::residue_at(const Monomial& m) const {
  Coeff modulus = 0;
  for (const auto& [mono, mod] : moduli)
    if (mono == m) modulus = mod;
  return {payload.coefficient(m), modulus};
}

std::strong_ordering operator<=>(const KEntry& a, const KEntry& b) {
  if (auto c = a.rho <=> b.rho; c != 0) return c;
  if (auto c = a.payload <=> b.payload; c != 0) return c;
  return std::lexicographical_compare_three_way(a.moduli.begin(), a.moduli.end(),
                                                b.moduli.begin(), b.moduli.end());
}

std::string KEntry::to_string() const {
  return "(" + std::to_string(rho) + ", " + payload.to_string() + ")";
}

std::string KMultiset::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k) s += ", ";
    s += entries[k].to_string();
  }
  return s + "}";
}

KEntry k_entry(const Polynomial& expansion, Coeff rho) {
  const int n = expansion.arity();
  const int i = expansion.excluded();
  KEntry entry{rho, Polynomial(n, i), {}};
  std::vector<std::pair<std::vector<int>, Coeff>> values;
  for (const Monomial& m : all_monomials(n, i)) {
    const Residue r = residue_of(expansion, m);
    if (r.value != 0) values.emplace_back(m.indices(), r.value);
    if (r.modulus != 0) entry.moduli.emplace_back(m, r.modulus);
  }
  entry.payload = Polynomial::from_terms(n, i, std::move(values));
  return entry;
}

KMultiset k_multiset(const LinkMapPresentation& p, int i) {
  KMultiset k;
  const GroupRingElement s = s_invariant(p, i);
  for (const auto& t : s.terms())
    k.entries.push_back(k_entry(t.key, t.rho));
  std::sort(k.entries.begin(), k.entries.end());
  return k;
}

std::string KPair::to_string() const {
  return "(" + std::to_string(rho) + ", " + residue.to_string() + ")";
}

std::string to_string(const std::vector<KPair>& multiset) {
  std::string s = "{";
  for (std::size_t k = 0; k < multiset.size(); ++k) {
    if (k) s += ", ";
    s += multiset[k].to_string();
  }
  return s + "}";
}

KSequence k_sequence(const GroupRingElement& s, std::span<const int> sequence) {
  validate_sequence(s.arity(), s.excluded(), sequence);
  const Monomial m = Monomial::from_indices(sequence);
  KSequence out;
  for (const auto& t : s.terms()) {
    KPair pair{t.rho, residue_of(t.key, m)};
    out.full.push_back(pair);
    if (pair.residue != Residue{0, 0}) out.filtered.push_back(pair);
  }
  std::sort(out.full.begin(), out.full.end());
  std::sort(out.filtered.begin(), out.filtered.end());
  return out;
}

KSequence k_sequence(const LinkMapPresentation& p, int i,
                     std::span<const int> sequence) {
  validate_sequence(p.n(), i, sequence);
  return k_sequence(s_invariant(p, i), sequence);
}

// ------------------------------------------------------------------- σ_i

Polynomial sigma_covering(const LinkMapPresentation& p, int i) {
  const GroupRingElement s = s_invariant(p, i);
  const Polynomial one = Polynomial::one(p.n(), i);
  Polynomial sigma(p.n(), i);
  for (const auto& t : s.terms()) {
    const Polynomial forward = t.key - one;
    const Polynomial backward = magnus_expand(t.witness.inverse()) - one;
    sigma -= (forward * backward).scaled(t.rho);
  }
  return sigma;
}

// ------------------------------------------------------------ n = 2 Kirk

std::string to_string(const TPolynomial& p) {
  if (p.empty()) return "0";
  std::vector<std::pair<int, Coeff>> order;
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    if (it->second > 0) order.emplace_back(*it);
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    if (it->second < 0) order.emplace_back(*it);

  std::string s;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto [e, c] = order[k];
    const Coeff mag = c < 0 ? -c : c;
    if (c < 0) s += "-";
    else if (k) s += "+";
    if (e == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag);
    s += e == 1 ? "t" : "t^" + std::to_string(e);
  }
  return s;
}

std::array<TPolynomial, 2> kirk_classical(const LinkMapPresentation& p) {
  if (p.n() != 2)
    throw InvalidInput("the classical Kirk invariant needs a 2-component link map");
  std::array<TPolynomial, 2> out;
  for (int i = 1; i <= 2; ++i) {
    const int j = 3 - i;
    TPolynomial& sigma = out[i - 1];
    const int idx[] = {j};
    const GroupRingElement s = s_invariant(p, i);
    for (const auto& t : s.terms()) {
      // E(x_j^k) = 1 + k X_j, and positivity makes k > 0.
      const Coeff k = t.key.coefficient(idx);
      if (k > INT32_MAX) throw CoefficientOverflow();
      sigma[static_cast<int>(k)] = checked_add(sigma[static_cast<int>(k)], t.rho);
      sigma[0] = checked_sub(sigma[0], t.rho);
    }
    std::erase_if(sigma, [](const auto& kv) { return kv.second == 0; });
  }
  return out;
}

// ---------------------------------------------------------- basing moves

LinkMapPresentation basing_change(const LinkMapPresentation& p, int j,
                                  const WordExpr& g) {
  if (j < 1 || j > p.n())
    throw InvalidInput("basing change on component " + std::to_string(j) +
                       " outside 1.." + std::to_string(p.n()));
  LinkMapPresentation out = p;
  for (int i = 1; i <= p.n(); ++i) {
    if (i == j) continue;
    for (Singularity& s : out.component(i)) {
      const Word w = s.word.flatten(p.n(), i);
      if (!w.uses(j)) continue;
      if (g.uses(i))
        throw InvalidInput("basing change word uses x" + std::to_string(i) +
                           ", the excluded generator of an affected component");
      const Word gw = g.flatten(p.n(), i);
      s.word = WordExpr::from_word(substitute_generator(w, j, gw).free_reduced());
    }
  }
  return out;
}

LinkMapPresentation rebase_component(const LinkMapPresentation& p, int i,
                                     const WordExpr& gamma) {
  if (gamma.uses(i))
    throw InvalidInput("rebasing word uses x" + std::to_string(i) +
                       ", the excluded generator of its component");
  LinkMapPresentation out = p;
  const Word gw = gamma.flatten(p.n(), i);
  for (Singularity& s : out.component(i)) {
    const Word w = s.word.flatten(p.n(), i);
    s.word = WordExpr::from_word(w.conjugated_by(gw).free_reduced());
  }
  return out;
}

}  // namespace kirk
