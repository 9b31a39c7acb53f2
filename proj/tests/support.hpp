#pragma once

// Shared generators and independent oracles for the test suites.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "kirk/catalog.hpp"
#include "kirk/invariants.hpp"
#include "kirk/polynomial.hpp"
#include "kirk/word.hpp"
#include "kirk/wirtinger.hpp"

namespace kirk::test {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline int random_generator(Rng& rng, int n, int excluded) {
  int j;
  do j = uniform(rng, 1, n);
  while (j == excluded);
  return j;
}

inline Word random_word(Rng& rng, int n, int excluded, int max_len) {
  std::vector<Letter> letters;
  const int len = uniform(rng, 0, max_len);
  for (int k = 0; k < len; ++k)
    letters.push_back({random_generator(rng, n, excluded), uniform(rng, 0, 1) ? 1 : -1});
  return Word(n, excluded, letters);
}

inline Polynomial random_polynomial(Rng& rng, int n, int excluded, bool constant_free,
                                    int max_coeff = 5) {
  std::vector<std::pair<std::vector<int>, Coeff>> terms;
  for (const Monomial& m : all_monomials(n, excluded, !constant_free))
    if (uniform(rng, 0, 2) == 0) terms.emplace_back(m.indices(), uniform(rng, -max_coeff, max_coeff));
  return Polynomial::from_terms(n, excluded, terms);
}

inline LinkMapPresentation random_presentation(Rng& rng, int n, int max_sings, int max_len) {
  LinkMapPresentation p(n);
  for (int i = 1; i <= n; ++i) {
    const int count = uniform(rng, 0, max_sings);
    for (int k = 0; k < count; ++k)
      p.add(i, uniform(rng, 0, 1) ? 1 : -1,
            WordExpr::from_word(random_word(rng, n, i, max_len)));
  }
  return p;
}

// Polynomials as index-sequence -> coefficient maps with schoolbook
// multiplication; independent of the packed representation.
using NaivePoly = std::map<std::vector<int>, long long>;

inline NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b, int excluded) {
  NaivePoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<int> m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::vector<int> sorted = m;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
      if (std::find(m.begin(), m.end(), excluded) != m.end()) continue;
      out[m] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline NaivePoly naive_expand(const Word& w) {
  NaivePoly acc = {{{}, 1}};
  for (const Letter& l : w.letters())
    acc = naive_mul(acc, {{{}, 1}, {{l.generator}, l.sign}}, w.excluded());
  return acc;
}

inline NaivePoly to_naive(const Polynomial& p) {
  NaivePoly out;
  for (const Term& t : p.terms()) out[t.monomial.indices()] = t.coeff;
  return out;
}

// All nonempty proper order-preserving subsequences, by recursion.
inline void subsequences(const std::vector<int>& seq, std::size_t at, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (at == seq.size()) {
    if (!cur.empty() && cur.size() < seq.size()) out.push_back(cur);
    return;
  }
  subsequences(seq, at + 1, cur, out);
  cur.push_back(seq[at]);
  subsequences(seq, at + 1, cur, out);
  cur.pop_back();
}

inline long long naive_indeterminacy(const NaivePoly& p, const std::vector<int>& seq) {
  std::vector<std::vector<int>> subs;
  std::vector<int> cur;
  subsequences(seq, 0, cur, subs);
  long long g = 0;
  for (const auto& s : subs) {
    auto it = p.find(s);
    g = std::gcd(g, it == p.end() ? 0LL : it->second);
  }
  return g;
}

inline std::vector<int> iota_vec(int first, int last) {
  std::vector<int> v;
  for (int k = first; k <= last; ++k) v.push_back(k);
  return v;
}

}  // namespace kirk::test
