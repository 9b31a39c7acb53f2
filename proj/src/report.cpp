#include "kirk/report.hpp"

#include <sstream>

namespace kirk {

namespace {

using Kind = Expectation::Kind;

const std::vector<std::pair<Kind, const char*>>& kind_names() {
  static const std::vector<std::pair<Kind, const char*>> names = {
      {Kind::KirkClassical, "kirk_classical"},
      {Kind::KappaTilde, "kappa_tilde"},
      {Kind::ETermCount, "e_term_count"},
      {Kind::ELeadingTerm, "e_leading_term"},
      {Kind::EInvariant, "e_invariant"},
      {Kind::KSequenceFull, "k_sequence_full"},
      {Kind::KSequenceFiltered, "k_sequence_filtered"},
      {Kind::KMultiset, "k_multiset"},
      {Kind::Sigma, "sigma"},
  };
  return names;
}

const char* kind_name(Kind k) {
  for (const auto& [kind, name] : kind_names())
    if (kind == k) return name;
  return "?";
}

Source source_from_string(const std::string& s) {
  for (Source src : {Source::Literature, Source::HandComputed, Source::Definition})
    if (to_string(src) == s) return src;
  throw InvalidInput("unknown expectation source '" + s + "'");
}

std::string kirk_pair_text(const LinkMapPresentation& p) {
  const auto k = kirk_classical(p);
  return "(" + to_string(k[0]) + ", " + to_string(k[1]) + ")";
}

std::vector<Monomial> rows_for(const LinkMapPresentation& p, int i,
                               const Polynomial& e, const ReportOptions& opt) {
  if (opt.sequence) {
    validate_sequence(p.n(), i, *opt.sequence);
    return {Monomial::from_indices(*opt.sequence)};
  }
  std::vector<Monomial> rows;
  for (const Monomial& m : all_monomials(p.n(), i))
    if (opt.all || e.coefficient(m) != 0) rows.push_back(m);
  return rows;
}

Json component_report(const LinkMapPresentation& p, int i, const ReportOptions& opt) {
  Json c;
  c["component"] = i;
  c["singularities"] = p.component(i).size();
  if (opt.verbose) {
    Json trace = Json::array();
    for (const auto& s : normalize_component(p, i))
      trace.push_back({{"sign", s.sign},
                       {"input", s.input.to_string()},
                       {"positive", s.positive.to_string()},
                       {"inverted", s.inverted}});
    c["normalization"] = trace;
  }
  const GroupRingElement s = s_invariant(p, i);
  Json sj = Json::array();
  for (const auto& t : s.terms())
    sj.push_back({{"rho", t.rho}, {"word", t.witness.to_string()}, {"expansion", t.key.to_string()}});
  c["S"] = sj;

  const Polynomial e = e_invariant(p, i);
  c["E"] = e.to_string();
  c["E_terms"] = to_json(e);

  Json kappa = Json::array();
  Json ks = Json::array();
  for (const Monomial& m : rows_for(p, i, e, opt)) {
    const auto idx = m.indices();
    const std::string seq = sequence_to_string(idx);
    const Residue r = residue(e, idx);
    kappa.push_back({{"sequence", seq},
                     {"kappa", e.coefficient(m)},
                     {"D", indeterminacy(e, idx)},
                     {"kappa_tilde", r.to_string()},
                     {"value", r.value},
                     {"modulus", r.modulus}});
    const KSequence k = k_sequence(s, idx);
    ks.push_back({{"sequence", seq},
                  {"full", to_string(k.full)},
                  {"filtered", to_string(k.filtered)},
                  {"full_pairs", to_json(k.full)},
                  {"filtered_pairs", to_json(k.filtered)}});
  }
  c["kappa"] = kappa;
  c["K_sequences"] = ks;

  const KMultiset km = k_multiset(p, i);
  c["K"] = km.to_string();
  Json entries = Json::array();
  for (const KEntry& k : km.entries) entries.push_back(to_json(k));
  c["K_entries"] = entries;
  c["sigma"] = sigma_covering(p, i).to_string();
  return c;
}

}  // namespace

Json expectations_to_json(const std::vector<Expectation>& e) {
  Json out = Json::array();
  for (const Expectation& x : e)
    out.push_back({{"kind", kind_name(x.kind)},
                   {"component", x.component},
                   {"sequence", sequence_to_string(x.sequence)},
                   {"value", x.expected},
                   {"source", to_string(x.source)}});
  return out;
}

std::vector<Expectation> expectations_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("'expected' must be a list");
  std::vector<Expectation> out;
  for (const Json& x : j) {
    try {
      Expectation e{};
      const auto kind = x.at("kind").get<std::string>();
      bool found = false;
      for (const auto& [k, name] : kind_names())
        if (kind == name) {
          e.kind = k;
          found = true;
        }
      if (!found) throw InvalidInput("unknown expectation kind '" + kind + "'");
      e.component = x.value("component", 0);
      e.sequence = parse_sequence(x.value("sequence", std::string()));
      e.expected = x.at("value").get<std::string>();
      e.source = source_from_string(x.value("source", std::string("literature")));
      out.push_back(std::move(e));
    } catch (const Json::exception& ex) {
      throw InvalidInput(std::string("malformed expectation: ") + ex.what());
    }
  }
  return out;
}

Json build_report(const LinkMapPresentation& p, const ReportOptions& opt,
                  const Json& expected) {
  p.validate();
  if (opt.component && (*opt.component < 1 || *opt.component > p.n()))
    throw InvalidInput("component " + std::to_string(*opt.component) + " outside 1.." +
                       std::to_string(p.n()));
  if (opt.sequence && !opt.component)
    throw InvalidInput("--sequence needs --component");

  Json r;
  r["engine"] = kEngineVersion;
  r["input"] = {{"source", opt.source}, {"n", p.n()}};
  if (p.n() == 2) r["kirk_classical"] = kirk_pair_text(p);
  Json comps = Json::array();
  for (int i = 1; i <= p.n(); ++i)
    if (!opt.component || *opt.component == i) comps.push_back(component_report(p, i, opt));
  r["components"] = comps;

  if (!expected.is_null()) {
    Json checks = Json::array();
    for (const Expectation& e : expectations_from_json(expected)) {
      const std::string got = evaluate(e, p);
      checks.push_back({{"label", e.label()},
                        {"expected", e.expected},
                        {"got", got},
                        {"pass", got == e.expected},
                        {"source", to_string(e.source)}});
    }
    r["checks"] = checks;
  }
  return r;
}

std::string render_report_text(const Json& r) {
  std::ostringstream out;
  out << "engine: " << r.at("engine").get<std::string>() << "\n";
  const Json& in = r.at("input");
  out << "input: " << in.at("source").get<std::string>() << " (n = " << in.at("n").get<int>()
      << ")\n";
  if (r.contains("kirk_classical"))
    out << "classical Kirk invariant: " << r.at("kirk_classical").get<std::string>() << "\n";

  for (const Json& c : r.at("components")) {
    const std::string i = std::to_string(c.at("component").get<int>());
    const auto count = c.at("singularities").get<std::size_t>();
    out << "\ncomponent " << i << " (" << count << (count == 1 ? " singularity)\n" : " singularities)\n");
    if (c.contains("normalization")) {
      out << "  normalization:\n";
      for (const Json& s : c.at("normalization")) {
        out << "    " << (s.at("sign").get<int>() > 0 ? "+1 " : "-1 ")
            << s.at("input").get<std::string>() << " -> " << s.at("positive").get<std::string>();
        if (s.at("inverted").get<bool>()) out << " (inverted)";
        out << "\n";
      }
    }
    out << "  S_" << i << ":";
    if (c.at("S").empty()) out << " 0";
    out << "\n";
    for (const Json& t : c.at("S"))
      out << "    rho = " << t.at("rho").get<Coeff>() << "  g = " << t.at("word").get<std::string>()
          << "  E(g) = " << t.at("expansion").get<std::string>() << "\n";
    out << "  E_" << i << " = " << c.at("E").get<std::string>() << "\n";
    out << "  kappa table (I: kappa, D, kappa~):";
    if (c.at("kappa").empty()) out << " no nonzero rows";
    out << "\n";
    for (const Json& row : c.at("kappa"))
      out << "    " << row.at("sequence").get<std::string>() << ": "
          << row.at("kappa").get<Coeff>() << ", " << row.at("D").get<Coeff>() << ", "
          << row.at("kappa_tilde").get<std::string>() << "\n";
    out << "  K_" << i << " = " << c.at("K").get<std::string>() << "\n";
    for (const Json& k : c.at("K_sequences")) {
      const std::string head = "  K(" + k.at("sequence").get<std::string>() + ";" + i + ")";
      out << head << " full     = " << k.at("full").get<std::string>() << "\n";
      out << head << " filtered = " << k.at("filtered").get<std::string>() << "\n";
    }
    out << "  sigma_" << i << " = " << c.at("sigma").get<std::string>() << "\n";
  }
  if (r.contains("checks")) {
    out << "\nchecks:\n";
    for (const Json& c : r.at("checks")) {
      out << "  " << (c.at("pass").get<bool>() ? "PASS " : "FAIL ")
          << c.at("label").get<std::string>() << " = " << c.at("got").get<std::string>();
      if (!c.at("pass").get<bool>()) out << " (expected " << c.at("expected").get<std::string>() << ")";
      out << " [" << c.at("source").get<std::string>() << "]\n";
    }
  }
  return out.str();
}

Comparison compare(const LinkMapPresentation& a, const LinkMapPresentation& b) {
  if (a.n() != b.n())
    throw ArityMismatch("cannot compare link maps with " + std::to_string(a.n()) + " and " +
                        std::to_string(b.n()) + " components");
  a.validate();
  b.validate();
  Comparison out;
  auto note = [&](const std::string& label, const std::string& x, const std::string& y) {
    if (x != y) out.witnesses.push_back(label + ": " + x + " vs " + y);
  };
  const int n = a.n();
  for (int i = 1; i <= n; ++i) {
    const std::string comp = std::to_string(i);
    const GroupRingElement sa = s_invariant(a, i);
    const GroupRingElement sb = s_invariant(b, i);
    const Polynomial ea = e_invariant(a, i);
    const Polynomial eb = e_invariant(b, i);
    const auto rows = all_monomials(n, i);
    for (const Monomial& m : rows) {
      const auto idx = m.indices();
      note("kappa_tilde(" + sequence_to_string(idx) + ";" + comp + ")",
           residue(ea, idx).to_string(), residue(eb, idx).to_string());
    }
    note("K_" + comp, k_multiset(a, i).to_string(), k_multiset(b, i).to_string());
    for (const Monomial& m : rows) {
      const auto idx = m.indices();
      const KSequence ka = k_sequence(sa, idx);
      const KSequence kb = k_sequence(sb, idx);
      const std::string head = "K(" + sequence_to_string(idx) + ";" + comp + ")";
      note(head + " full", to_string(ka.full), to_string(kb.full));
      note(head + " filtered", to_string(ka.filtered), to_string(kb.filtered));
    }
    note("sigma_" + comp, sigma_covering(a, i).to_string(), sigma_covering(b, i).to_string());
  }
  out.distinguished = !out.witnesses.empty();
  return out;
}

Json to_json(const Comparison& c) {
  return {{"verdict", c.distinguished ? "DISTINGUISHED" : "INDISTINGUISHABLE-BY-THESE-INVARIANTS"},
          {"witnesses", c.witnesses},
          {"engine", kEngineVersion}};
}

std::string render_comparison_text(const Comparison& c) {
  std::string out = c.distinguished ? "DISTINGUISHED\n" : "INDISTINGUISHABLE-BY-THESE-INVARIANTS\n";
  for (const auto& w : c.witnesses) out += "  " + w + "\n";
  return out;
}

}  // namespace kirk
