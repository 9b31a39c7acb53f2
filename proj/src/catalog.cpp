#include "kirk/catalog.hpp"

#include <numeric>

namespace kirk {

std::string to_string(Source s) {
  switch (s) {
    case Source::Literature: return "literature";
    case Source::HandComputed: return "hand-computed";
    case Source::Definition: return "definition";
  }
  return "?";
}

std::string Expectation::label() const {
  const std::string comp = std::to_string(component);
  const std::string seq = sequence_to_string(sequence);
  switch (kind) {
    case Kind::KirkClassical: return "kirk_classical";
    case Kind::KappaTilde: return "kappa_tilde(" + seq + ";" + comp + ")";
    case Kind::ETermCount: return "term_count(E_" + comp + ")";
    case Kind::ELeadingTerm: return "leading_term(E_" + comp + ")";
    case Kind::EInvariant: return "E_" + comp;
    case Kind::KSequenceFull: return "K(" + seq + ";" + comp + ") full";
    case Kind::KSequenceFiltered: return "K(" + seq + ";" + comp + ") filtered";
    case Kind::KMultiset: return "K_" + comp;
    case Kind::Sigma: return "sigma_" + comp;
  }
  return "?";
}

std::string evaluate(const Expectation& e, const LinkMapPresentation& p) {
  using Kind = Expectation::Kind;
  switch (e.kind) {
    case Kind::KirkClassical: {
      auto k = kirk_classical(p);
      return "(" + to_string(k[0]) + ", " + to_string(k[1]) + ")";
    }
    case Kind::KappaTilde: return kappa_tilde(p, e.component, e.sequence).to_string();
    case Kind::ETermCount: return std::to_string(e_invariant(p, e.component).size());
    case Kind::ELeadingTerm: {
      auto lead = leading_term(e_invariant(p, e.component));
      if (!lead) return "none";
      return "(" + lead->monomial.to_string() + ", " + std::to_string(lead->coeff) + ")";
    }
    case Kind::EInvariant: return e_invariant(p, e.component).to_string();
    case Kind::KSequenceFull:
      return to_string(k_sequence(p, e.component, e.sequence).full);
    case Kind::KSequenceFiltered:
      return to_string(k_sequence(p, e.component, e.sequence).filtered);
    case Kind::KMultiset: return k_multiset(p, e.component).to_string();
    case Kind::Sigma: return sigma_covering(p, e.component).to_string();
  }
  return "?";
}

namespace {

using Kind = Expectation::Kind;

std::vector<int> iota_range(int first, int last) {
  std::vector<int> v;
  for (int k = first; k <= last; ++k) v.push_back(k);
  return v;
}

std::string monomial_text(const std::vector<int>& indices) {
  return Monomial::from_indices(indices).to_string();
}

}  // namespace

CatalogEntry build_fenn_rolfsen() {
  LinkMapPresentation p(2);
  p.add(1, -1, WordExpr::gen(2));
  p.add(2, +1, WordExpr::gen(1));
  return {
      "fenn-rolfsen",
      2,
      std::nullopt,
      p,
      0,
      {
          {Kind::KirkClassical, 0, {}, "(1-t, t-1)", Source::Literature},
          {Kind::KappaTilde, 1, {2}, "-1", Source::HandComputed},
          {Kind::KappaTilde, 2, {1}, "1", Source::HandComputed},
          {Kind::Sigma, 1, {}, "0", Source::Definition},
          {Kind::Sigma, 2, {}, "0", Source::Definition},
      },
  };
}

CatalogEntry build_y(int n) {
  if (n < 3) throw InvalidInput("Y[n] needs n >= 3");
  if (n > kMaxArity) throw InvalidInput("Y[n] needs n <= " + std::to_string(kMaxArity));
  LinkMapPresentation p(n);
  const auto top = iota_range(1, n - 1);
  p.add(n, +1, nested_commutator(top));
  return {
      "y-family",
      n,
      std::nullopt,
      p,
      n,
      {
          {Kind::KappaTilde, n, top, "1", Source::Literature},
          {Kind::ETermCount, n, {}, std::to_string(1L << (n - 2)), Source::Literature},
          {Kind::ELeadingTerm, n, {}, "(" + monomial_text(top) + ", 1)", Source::Literature},
          {Kind::KSequenceFiltered, n, top, "{(1, 1)}", Source::Literature},
          {Kind::Sigma, n, {}, "0", Source::Literature},
      },
  };
}

namespace {

CatalogEntry stirling_impl(int n, std::optional<int> reversed) {
  if (n < 3) throw InvalidInput("S[n] needs n >= 3");
  if (n > kMaxArity) throw InvalidInput("S[n] needs n <= " + std::to_string(kMaxArity));
  if (reversed && (*reversed <= 1 || *reversed >= n))
    throw InvalidInput("reversed component must satisfy 1 < i < n");

  // c = [x2,[x3,...[x_{n-2},x_{n-1}]...]], with x_i inverted for S^i[n].
  WordExpr c;
  {
    const auto idx = iota_range(2, n - 1);
    auto leaf = [&](int j) {
      return reversed && *reversed == j ? WordExpr::letter(j, -1) : WordExpr::gen(j);
    };
    c = leaf(idx.back());
    for (auto it = idx.rbegin() + 1; it != idx.rend(); ++it)
      c = WordExpr::commutator(leaf(*it), c);
  }
  LinkMapPresentation p(n);
  p.add(n, +1, WordExpr::gen(1));
  p.add(n, -1, WordExpr::conjugate(WordExpr::gen(1), c));

  const auto top = iota_range(1, n - 1);
  const std::string kappa = reversed ? "1" : "-1";
  return {
      reversed ? "stirling-reversed" : "stirling",
      n,
      reversed,
      p,
      n,
      {
          {Kind::KappaTilde, n, top, kappa, Source::Literature},
          {Kind::KSequenceFiltered, n, {1}, "{(-1, 1), (1, 1)}", Source::Literature},
          {Kind::KMultiset, n, {}, "{(-1, X1), (1, X1)}", Source::Literature},
          {Kind::Sigma, n, {}, "0", Source::Literature},
      },
  };
}

}  // namespace

CatalogEntry build_stirling(int n) { return stirling_impl(n, std::nullopt); }

CatalogEntry build_stirling_reversed(int n, int reversed) {
  return stirling_impl(n, reversed);
}

CatalogEntry build_y3() {
  LinkMapPresentation p(3);
  p.add(3, +1, "x1 x2^-1");
  p.add(3, -1, "x1");
  p.add(3, +1, "x2 x1");
  p.add(3, -1, "x2 x1 x2^-1");
  return {
      "y-modified",
      3,
      std::nullopt,
      p,
      3,
      {
          {Kind::EInvariant, 3, {}, "0", Source::Literature},
          {Kind::KappaTilde, 3, {1}, "0", Source::Literature},
          {Kind::KappaTilde, 3, {2}, "0", Source::Literature},
          {Kind::KappaTilde, 3, {1, 2}, "0", Source::Literature},
          {Kind::KappaTilde, 3, {2, 1}, "0", Source::Literature},
          {Kind::KSequenceFull, 3, {1}, "{(-1, 1), (-1, 1), (1, 1), (1, 1)}",
           Source::Literature},
          {Kind::KSequenceFiltered, 3, {2}, "{(1, -1), (1, 1)}", Source::Literature},
          {Kind::KSequenceFull, 3, {2}, "{(-1, 0), (-1, 0), (1, -1), (1, 1)}",
           Source::HandComputed},
      },
  };
}

std::vector<CatalogInfo> catalog_names() {
  return {
      {"fenn-rolfsen", "", "two-component Fenn-Rolfsen link map"},
      {"y-family", "--n K (K >= 3)", "Y[K], Jin-Kirk suspension of a Milnor link"},
      {"stirling", "--n K (K >= 3) [--reversed i, 1 < i < K]",
       "generalized Stirling link map S[K], or S^i[K] with component i reversed"},
      {"y-modified", "", "three-component link map Y with four singularities on K3"},
  };
}

CatalogEntry build_catalog_entry(const std::string& name, std::optional<int> n,
                                 std::optional<int> reversed) {
  auto need_n = [&]() {
    if (!n) throw InvalidInput("catalog entry '" + name + "' needs --n");
    return *n;
  };
  if (reversed && name != "stirling")
    throw InvalidInput("--reversed only applies to 'stirling'");
  if (name == "fenn-rolfsen") return build_fenn_rolfsen();
  if (name == "y-family") return build_y(need_n());
  if (name == "stirling")
    return reversed ? build_stirling_reversed(need_n(), *reversed)
                    : build_stirling(need_n());
  if (name == "y-modified") return build_y3();
  throw InvalidInput("unknown catalog entry '" + name + "'");
}

// ------------------------------------------------------ diagram fixtures

CrossSection fenn_rolfsen_cross_section() {
  // A Whitehead-type clasp: component 1 passes under component 2 twice with
  // opposite signs and has one self-crossing (the resolved singular point).
  CrossSection cs;
  DiagramSpec& d = cs.diagram;
  d.n = 2;
  d.arcs = {{"a1", 1}, {"a2", 1}, {"a3", 1}, {"b1", 2}, {"b2", 2}};
  d.base_arcs = {{1, "a1"}, {2, "b1"}};
  d.crossings = {
      {"b1", "a1", "a2", +1},
      {"a2", "b1", "b2", -1},
      {"b2", "a2", "a3", -1},
      {"a3", "b2", "b1", +1},
      {"a1", "a3", "a1", +1},
  };
  cs.singularities[1] = {{-1, LoopSpec{{{"b1", +1}}}}};
  cs.singularities[2] = {{+1, LoopSpec{{{"a2", +1}}}}};
  return cs;
}

CrossSection y3_cross_section() {
  // Components 1 and 2 form a linking-number-zero clasp; the loop around the
  // singular point of component 3 traces [m(a2), x2].
  CrossSection cs;
  DiagramSpec& d = cs.diagram;
  d.n = 3;
  d.arcs = {{"a1", 1}, {"a2", 1}, {"b1", 2}, {"c1", 3}};
  d.base_arcs = {{1, "a1"}, {2, "b1"}, {3, "c1"}};
  d.crossings = {
      {"b1", "a1", "a2", +1},
      {"b1", "a2", "a1", -1},
  };
  cs.singularities[3] = {
      {+1, LoopSpec{{{"a2", -1}, {"b1", -1}, {"a2", +1}, {"b1", +1}}}}};
  return cs;
}

CrossSection milnor_link_cross_section(int n) {
  if (n < 3 || n > kMaxArity) throw InvalidInput("Milnor link fixture needs 3 <= n <= 15");
  CrossSection cs;
  DiagramSpec& d = cs.diagram;
  d.n = n;
  auto arc = [](int c, int k) { return "a" + std::to_string(c) + "_" + std::to_string(k); };
  for (int c = 1; c <= n; ++c) {
    d.arcs.push_back({arc(c, 1), c});
    d.base_arcs[c] = arc(c, 1);
  }
  // Component c < n-1 clasps component c+1 with linking number zero, so its
  // second arc carries the meridian x_{c+1}^-1 x_c x_{c+1}.
  for (int c = 1; c <= n - 2; ++c) {
    d.arcs.push_back({arc(c, 2), c});
    d.crossings.push_back({arc(c + 1, 1), arc(c, 1), arc(c, 2), +1});
    d.crossings.push_back({arc(c + 1, 1), arc(c, 2), arc(c, 1), -1});
  }
  // The loop around the singular point of component n reads the nested
  // commutator [m_1,[m_2,...[m_{n-2},m_{n-1}]...]] letter by letter.
  const Word g = nested_commutator(iota_range(1, n - 1)).flatten(n, n);
  LoopSpec loop;
  for (const Letter& l : g.letters()) {
    const int c = l.generator;
    loop.crossings.emplace_back(c <= n - 2 ? arc(c, 2) : arc(c, 1), l.sign);
  }
  cs.singularities[n] = {{+1, loop}};
  return cs;
}

}  // namespace kirk
