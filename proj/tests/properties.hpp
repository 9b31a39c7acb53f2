#pragma once

// Randomized property suites. Each returns a case count and the first
// failing case, so the doctest suite and the acceptance binary share them.

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>

#include "support.hpp"

namespace kirk::test {

struct PropertyResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

inline constexpr int kMaxWordLength = 12;

struct Ring {
  int n;
  int i;
};

inline Ring random_ring(Rng& rng, int min_n = 2) {
  const int n = uniform(rng, min_n, 5);
  return {n, uniform(rng, 1, n)};
}

// Runs body(rng) cases times; body returns an empty string on success and a
// description of the counterexample otherwise. Exceptions count as failures.
inline PropertyResult run_property(const std::string& name, std::uint64_t seed, long cases,
                                   const std::function<std::string(Rng&)>& body) {
  PropertyResult r{name};
  Rng rng(seed);
  for (long k = 0; k < cases; ++k) {
    std::string failure;
    try {
      failure = body(rng);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    ++r.cases;
    if (!failure.empty()) {
      if (r.failures++ == 0) r.first_failure = "case " + std::to_string(k) + ": " + failure;
    }
  }
  return r;
}

inline PropertyResult prop_homomorphism(std::uint64_t seed, long cases) {
  return run_property("E(uv) = E(u)E(v)", seed, cases, [](Rng& rng) -> std::string {
    const Ring r = random_ring(rng);
    const Word u = random_word(rng, r.n, r.i, kMaxWordLength);
    const Word v = random_word(rng, r.n, r.i, kMaxWordLength);
    if (magnus_expand(u * v) != magnus_expand(u) * magnus_expand(v))
      return u.to_string() + " | " + v.to_string();
    if (to_naive(magnus_expand(u * v)) != naive_expand(u * v)) return "naive " + (u * v).to_string();
    return {};
  });
}

inline PropertyResult prop_inverse(std::uint64_t seed, long cases) {
  return run_property("E(w)E(w^-1) = 1", seed, cases, [](Rng& rng) -> std::string {
    const Ring r = random_ring(rng);
    const Word w = random_word(rng, r.n, r.i, kMaxWordLength);
    const Polynomial one = Polynomial::one(r.n, r.i);
    if (magnus_expand(w) * magnus_expand(w.inverse()) != one ||
        magnus_expand(w.inverse()) * magnus_expand(w) != one)
      return w.to_string();
    return {};
  });
}

inline PropertyResult prop_reduced_relators(std::uint64_t seed, long cases) {
  return run_property("E([x_j, x_j^g]) = 1", seed, cases, [](Rng& rng) -> std::string {
    const Ring r = random_ring(rng);
    const int j = random_generator(rng, r.n, r.i);
    const Word g = random_word(rng, r.n, r.i, kMaxWordLength);
    const Word x = Word::generator(r.n, r.i, j);
    const Word rel = commutator(x, x.conjugated_by(g));
    if (magnus_expand(rel) != Polynomial::one(r.n, r.i) || !rf_equal(rel, Word(r.n, r.i)))
      return "j=" + std::to_string(j) + " g=" + g.to_string();
    return {};
  });
}

// Leading nonconstant coefficient of the schoolbook expansion, 0 if none.
inline long long naive_leading_coeff(const NaivePoly& p) {
  const std::vector<int>* best = nullptr;
  long long c = 0;
  for (const auto& [m, coeff] : p) {
    if (m.empty()) continue;
    if (!best || m.size() < best->size() || (m.size() == best->size() && m < *best)) {
      best = &m;
      c = coeff;
    }
  }
  return c;
}

inline PropertyResult prop_positivity(std::uint64_t seed, long cases) {
  return run_property("positivity dichotomy", seed, cases, [](Rng& rng) -> std::string {
    const Ring r = random_ring(rng);
    Word w = random_word(rng, r.n, r.i, kMaxWordLength);
    // Mix in reduced relators so trivial elements appear regularly.
    if (uniform(rng, 0, 3) == 0) {
      const Word x = Word::generator(r.n, r.i, random_generator(rng, r.n, r.i));
      w = commutator(x, x.conjugated_by(random_word(rng, r.n, r.i, 4)));
    }
    const bool trivial = magnus_expand(w) == Polynomial::one(r.n, r.i);
    const bool pos = is_positive(w);
    const bool neg = is_positive(w.inverse());
    const long long lead = naive_leading_coeff(naive_expand(w));
    // The trivial element counts as positive; everything else is exactly one way round.
    if (trivial ? !(pos && neg) : (pos == neg)) return "dichotomy " + w.to_string();
    if (!trivial && pos != (lead > 0)) return "leading coefficient " + w.to_string();
    const Normalized norm = positive_normalize(w);
    if (!is_positive(norm.word) || norm.inverted == pos) return "normalize " + w.to_string();
    const int j = random_generator(rng, r.n, r.i);
    const Word g = random_word(rng, r.n, r.i, 6);
    if (is_positive(substitute_generator(w, j, g)) != pos)
      return "substitution x" + std::to_string(j) + " -> " + g.to_string() + " in " + w.to_string();
    return {};
  });
}

inline bool residues_agree(const Polynomial& a, const Polynomial& b, int n, int i, std::string& where) {
  for (const Monomial& m : all_monomials(n, i)) {
    const auto idx = m.indices();
    if (indeterminacy(a, idx) != indeterminacy(b, idx) || residue(a, idx) != residue(b, idx)) {
      where = sequence_to_string(idx);
      return false;
    }
  }
  return true;
}

inline PropertyResult prop_claim_conjugation(std::uint64_t seed, long cases) {
  return run_property("(1+U)P(1+U)^-1 keeps kappa mod D", seed, cases, [](Rng& rng) -> std::string {
    const Ring r = random_ring(rng);
    const Polynomial p = random_polynomial(rng, r.n, r.i, true);
    const Polynomial unit = Polynomial::one(r.n, r.i) + random_polynomial(rng, r.n, r.i, true);
    const Polynomial inv = unit_inverse(unit);
    if (unit * inv != Polynomial::one(r.n, r.i)) return "inverse of " + unit.to_string();
    const Polynomial q = unit * p * inv;
    std::string where;
    if (!residues_agree(p, q, r.n, r.i, where)) return "P=" + p.to_string() + " U=" + unit.to_string() + " I=" + where;
    return {};
  });
}

inline PropertyResult prop_claim_substitution(std::uint64_t seed, long cases) {
  return run_property("substitute keeps kappa mod D", seed, cases, [](Rng& rng) -> std::string {
    const Ring r = random_ring(rng);
    const Polynomial p = random_polynomial(rng, r.n, r.i, uniform(rng, 0, 1) == 0);
    const Polynomial u = random_polynomial(rng, r.n, r.i, true);
    const int j = random_generator(rng, r.n, r.i);
    const Polynomial q = substitute(p, j, u);
    std::string where;
    if (!residues_agree(p, q, r.n, r.i, where))
      return "P=" + p.to_string() + " j=" + std::to_string(j) + " U=" + u.to_string() + " I=" + where;
    return {};
  });
}

// Components are populated with probability 1/2 so that basing changes have
// room: g may only use x_k when no populated component excludes x_k.
inline LinkMapPresentation random_sparse_presentation(Rng& rng, int n, int max_sings, int max_len) {
  LinkMapPresentation p(n);
  for (int i = 1; i <= n; ++i) {
    if (uniform(rng, 0, 1) == 0) continue;
    const int count = uniform(rng, 1, max_sings);
    for (int k = 0; k < count; ++k)
      p.add(i, uniform(rng, 0, 1) ? 1 : -1, WordExpr::from_word(random_word(rng, n, i, max_len)));
  }
  return p;
}

// A random word over the generators basing_change(p, j, ·) accepts.
inline WordExpr random_basing_word(Rng& rng, const LinkMapPresentation& p, int j, int max_len) {
  std::vector<int> allowed;
  for (int k = 1; k <= p.n(); ++k) {
    bool blocked = false;
    if (k != j)
      for (const Singularity& s : p.component(k))
        if (s.word.uses(j)) blocked = true;
    if (!blocked) allowed.push_back(k);
  }
  std::vector<WordExpr> letters;
  const int len = uniform(rng, 0, max_len);
  for (int t = 0; t < len; ++t)
    letters.push_back(WordExpr::letter(allowed[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(allowed.size()) - 1))],
                                       uniform(rng, 0, 1) ? 1 : -1));
  return WordExpr::product(std::move(letters));
}

// Every unbased invariant of every component; empty when all agree.
inline std::string compare_unbased(const LinkMapPresentation& a, const LinkMapPresentation& b) {
  for (int i = 1; i <= a.n(); ++i) {
    if (k_multiset(a, i) != k_multiset(b, i)) return "K_" + std::to_string(i);
    const GroupRingElement sa = s_invariant(a, i);
    const GroupRingElement sb = s_invariant(b, i);
    const Polynomial ea = e_invariant(a, i);
    const Polynomial eb = e_invariant(b, i);
    for (const Monomial& m : all_monomials(a.n(), i)) {
      const auto idx = m.indices();
      const std::string at = "(" + sequence_to_string(idx) + ";" + std::to_string(i) + ")";
      if (residue(ea, idx) != residue(eb, idx)) return "kappa_tilde" + at;
      const KSequence ka = k_sequence(sa, idx);
      const KSequence kb = k_sequence(sb, idx);
      if (ka.full != kb.full) return "K full" + at;
      if (ka.filtered != kb.filtered) return "K filtered" + at;
    }
  }
  return {};
}

inline PropertyResult prop_basing_invariance(std::uint64_t seed, long cases) {
  return run_property("basing invariance of kappa_tilde, K_i, K(I;i)", seed, cases,
                      [](Rng& rng) -> std::string {
    const int n = uniform(rng, 2, 5);
    const LinkMapPresentation p = random_sparse_presentation(rng, n, 6, kMaxWordLength);
    LinkMapPresentation q = p;
    std::ostringstream ops;
    const int steps = uniform(rng, 1, 3);
    for (int s = 0; s < steps; ++s) {
      if (uniform(rng, 0, 1) == 0) {
        const int j = uniform(rng, 1, n);
        const WordExpr g = random_basing_word(rng, q, j, 6);
        ops << " basing_change(" << j << ", " << g.to_string() << ")";
        q = basing_change(q, j, g);
      } else {
        const int i = uniform(rng, 1, n);
        const Word gamma = random_word(rng, n, i, 6);
        ops << " rebase_component(" << i << ", " << gamma.to_string() << ")";
        q = rebase_component(q, i, WordExpr::from_word(gamma));
      }
    }
    const std::string diff = compare_unbased(p, q);
    return diff.empty() ? diff : diff + " after" + ops.str();
  });
}

inline PropertyResult prop_cancellation(std::uint64_t seed, long cases) {
  return run_property("a (+1, w), (-1, w) pair changes nothing", seed, cases, [](Rng& rng) -> std::string {
    const int n = uniform(rng, 2, 5);
    const LinkMapPresentation p = random_presentation(rng, n, 3, kMaxWordLength);
    LinkMapPresentation q = p;
    const int i = uniform(rng, 1, n);
    const Word w = random_word(rng, n, i, kMaxWordLength);
    // The second copy spells the same element differently, possibly inverted.
    const Word x = Word::generator(n, i, random_generator(rng, n, i));
    Word w2 = w * commutator(x, x.conjugated_by(random_word(rng, n, i, 4)));
    if (uniform(rng, 0, 1)) w2 = w2.inverse();
    q.add(i, +1, WordExpr::from_word(w));
    q.add(i, -1, WordExpr::from_word(w2));
    if (s_invariant(q, i) != s_invariant(p, i)) return "S_" + std::to_string(i) + " " + w.to_string();
    if (e_invariant(q, i) != e_invariant(p, i)) return "E_" + std::to_string(i);
    if (sigma_covering(q, i) != sigma_covering(p, i)) return "sigma_" + std::to_string(i);
    return compare_unbased(p, q);
  });
}

inline PropertyResult prop_aggregation(std::uint64_t seed, long cases) {
  return run_property("E_i equals the unaggregated sum", seed, cases, [](Rng& rng) -> std::string {
    const int n = uniform(rng, 2, 5);
    const LinkMapPresentation p = random_presentation(rng, n, 6, kMaxWordLength);
    for (int i = 1; i <= n; ++i) {
      Polynomial raw(n, i);
      Polynomial from_s(n, i);
      const Polynomial one = Polynomial::one(n, i);
      for (const Singularity& s : p.component(i)) {
        const Word w = s.word.flatten(n, i);
        // Orientation by the naive leading coefficient.
        const Word g = naive_leading_coeff(naive_expand(w)) < 0 ? w.inverse() : w;
        raw = raw + Polynomial::constant(n, i, s.sign) * (magnus_expand(g) - one);
      }
      const GroupRingElement s = s_invariant(p, i);
      for (const GroupRingTerm& t : s.terms())
        from_s = from_s + Polynomial::constant(n, i, t.rho) * (t.key - one);
      if (raw != e_invariant(p, i) || from_s != raw) return "component " + std::to_string(i);
    }
    return {};
  });
}

inline PropertyResult prop_sigma_parity(std::uint64_t seed, long cases) {
  return run_property("sigma vanishes on homogeneous singularities", seed, cases,
                      [](Rng& rng) -> std::string {
    const int n = uniform(rng, 3, 5);
    const int i = uniform(rng, 1, n);
    std::vector<int> others;
    for (int k = 1; k <= n; ++k)
      if (k != i) others.push_back(k);
    // Every nested commutator of distinct generators expands in one degree.
    LinkMapPresentation p(n);
    const int d = uniform(rng, 1, static_cast<int>(others.size()));
    const int count = uniform(rng, 1, 6);
    for (int k = 0; k < count; ++k) {
      std::shuffle(others.begin(), others.end(), rng);
      const std::vector<int> idx(others.begin(), others.begin() + d);
      p.add(i, uniform(rng, 0, 1) ? 1 : -1, nested_commutator(idx));
    }
    const GroupRingElement s = s_invariant(p, i);
    for (const GroupRingTerm& t : s.terms()) {
      const Polynomial reduced = t.key - Polynomial::one(n, i);
      for (const Term& term : reduced.terms())
        if (term.monomial.degree() != d) return "not homogeneous";
    }
    if (!sigma_covering(p, i).is_zero()) return "degree " + std::to_string(d);
    return {};
  });
}

inline PropertyResult prop_ring_laws(std::uint64_t seed, long cases) {
  return run_property("ring laws against schoolbook products", seed, cases, [](Rng& rng) -> std::string {
    const Ring r = random_ring(rng);
    const Polynomial a = random_polynomial(rng, r.n, r.i, false);
    const Polynomial b = random_polynomial(rng, r.n, r.i, false);
    const Polynomial c = random_polynomial(rng, r.n, r.i, false);
    if (to_naive(a * b) != naive_mul(to_naive(a), to_naive(b), r.i)) return "product";
    if ((a * b) * c != a * (b * c)) return "associativity";
    if (a * (b + c) != a * b + a * c || (a + b) * c != a * c + b * c) return "distributivity";
    if (a + b != b + a || (a - b) + b != a) return "addition";
    // Any product of n constant-free factors repeats a variable.
    Polynomial prod = Polynomial::one(r.n, r.i);
    for (int k = 0; k < r.n; ++k) prod = prod * random_polynomial(rng, r.n, r.i, true);
    if (!prod.is_zero()) return "nilpotency";
    const int j = random_generator(rng, r.n, r.i);
    const Polynomial x = Polynomial::variable(r.n, r.i, j);
    const Polynomial one = Polynomial::one(r.n, r.i);
    if ((one + x) * (one - x) != one) return "(1+X)(1-X)";
    return {};
  });
}

inline std::vector<std::function<PropertyResult(std::uint64_t, long)>> acceptance_properties() {
  return {prop_homomorphism,      prop_inverse,           prop_reduced_relators,
          prop_positivity,        prop_claim_conjugation, prop_claim_substitution,
          prop_basing_invariance};
}

}  // namespace kirk::test
