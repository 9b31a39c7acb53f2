#include "kirk/wirtinger.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace kirk {

// ------------------------------------------------------------- validation

int DiagramSpec::component_of(const std::string& arc) const {
  for (const Arc& a : arcs)
    if (a.id == arc) return a.component;
  throw MalformedDiagram("unknown arc '" + arc + "'");
}

void DiagramSpec::validate() const {
  if (n < 1 || n > kMaxArity)
    throw MalformedDiagram("component count " + std::to_string(n) + " outside 1.." +
                           std::to_string(kMaxArity));
  std::set<std::string> ids;
  for (const Arc& a : arcs) {
    if (!ids.insert(a.id).second) throw MalformedDiagram("duplicate arc '" + a.id + "'");
    if (a.component < 1 || a.component > n)
      throw MalformedDiagram("arc '" + a.id + "' has component " +
                             std::to_string(a.component) + " outside 1.." +
                             std::to_string(n));
  }
  for (int c = 1; c <= n; ++c) {
    auto it = base_arcs.find(c);
    if (it == base_arcs.end())
      throw MalformedDiagram("component " + std::to_string(c) + " has no base arc");
    if (!ids.count(it->second) || component_of(it->second) != c)
      throw MalformedDiagram("base arc '" + it->second + "' of component " +
                             std::to_string(c) + " is not an arc of that component");
  }
  for (const auto& [c, arc] : base_arcs)
    if (c < 1 || c > n)
      throw MalformedDiagram("base arc given for component " + std::to_string(c));

  std::map<std::string, const Crossing*> next;  // under_in -> crossing
  std::set<std::string> outs;
  for (const Crossing& x : crossings) {
    for (const auto* id : {&x.over, &x.under_in, &x.under_out})
      if (!ids.count(*id)) throw MalformedDiagram("crossing references unknown arc '" + *id + "'");
    if (x.sign != 1 && x.sign != -1)
      throw MalformedDiagram("crossing sign must be ±1");
    if (component_of(x.under_in) != component_of(x.under_out))
      throw MalformedDiagram("crossing under '" + x.over + "' joins arcs '" +
                             x.under_in + "' and '" + x.under_out +
                             "' of different components");
    if (!outs.insert(x.under_out).second)
      throw MalformedDiagram("arc '" + x.under_out + "' ends more than one crossing");
    if (!next.emplace(x.under_in, &x).second)
      throw MalformedDiagram("arc '" + x.under_in + "' starts more than one crossing");
  }

  // Following under-crossings from the base arc must traverse every arc of
  // the component and return to the base arc.
  for (int c = 1; c <= n; ++c) {
    std::size_t count = std::count_if(arcs.begin(), arcs.end(),
                                      [c](const Arc& a) { return a.component == c; });
    std::string at = base_arcs.at(c);
    std::size_t visited = 1;
    while (true) {
      auto it = next.find(at);
      if (it == next.end()) {
        if (visited == 1 && count == 1) break;
        throw MalformedDiagram("component " + std::to_string(c) +
                               " does not close up at arc '" + at + "'");
      }
      at = it->second->under_out;
      if (at == base_arcs.at(c)) break;
      if (++visited > count)
        throw MalformedDiagram("component " + std::to_string(c) +
                               " cycles without returning to its base arc");
    }
    if (visited != count)
      throw MalformedDiagram("component " + std::to_string(c) +
                             " has arcs unreachable from its base arc");
  }
}

// --------------------------------------------------------- Milnor's sweeps

namespace {

// Diagram of l_i: arcs separated only by crossings under component i merge.
struct ReducedDiagram {
  std::unordered_map<std::string, std::string> representative;
  std::unordered_map<std::string, int> component;
  // Per component (i excluded), its retained crossings in order from the
  // base arc. The last one closes the component back onto the base arc.
  std::map<int, std::vector<Crossing>> chains;
  std::map<int, std::string> base;
};

ReducedDiagram reduce(const DiagramSpec& d, int excluded) {
  d.validate();
  if (excluded < 1 || excluded > d.n)
    throw InvalidInput("excluded component " + std::to_string(excluded) +
                       " outside 1.." + std::to_string(d.n));
  ReducedDiagram r;
  for (const Arc& a : d.arcs) {
    r.component[a.id] = a.component;
    r.representative[a.id] = a.id;
  }
  std::map<std::string, const Crossing*> next;
  for (const Crossing& x : d.crossings) next[x.under_in] = &x;

  for (int c = 1; c <= d.n; ++c) {
    if (c == excluded) continue;
    const std::string base = d.base_arcs.at(c);
    r.base[c] = base;
    std::string rep = base;
    std::string at = base;
    std::vector<std::string> open_class;  // arcs of the class containing `at`
    auto& chain = r.chains[c];
    while (true) {
      r.representative[at] = rep;
      open_class.push_back(at);
      auto it = next.find(at);
      if (it == next.end()) break;
      const Crossing& x = *it->second;
      const std::string out = x.under_out;
      const bool retained = r.component.at(x.over) != excluded;
      if (retained) chain.push_back(x);
      if (out == base) {
        // A deleted closing crossing glues the last class onto the base arc.
        if (!retained)
          for (const auto& id : open_class) r.representative[id] = base;
        break;
      }
      if (retained) {
        rep = out;
        open_class.clear();
      }
      at = out;
    }
  }
  for (auto& [c, chain] : r.chains)
    for (Crossing& x : chain) {
      x.under_in = r.representative.at(x.under_in);
      x.under_out = r.representative.at(x.under_out);
      if (r.component.at(x.over) != excluded)
        x.over = r.representative.at(x.over);
    }
  return r;
}

using Assignment = std::map<std::string, Word>;

std::map<std::string, Polynomial> expansions(const Assignment& a) {
  std::map<std::string, Polynomial> out;
  for (const auto& [id, w] : a) out.emplace(id, magnus_expand(w));
  return out;
}

// One Jacobi sweep: walk each component from its base arc, using the
// previous sweep's conjugators for over-arcs.
Assignment sweep(const ReducedDiagram& r, const Assignment& prev, int n,
                 int excluded) {
  Assignment next;
  for (const auto& [c, chain] : r.chains) {
    Word w(n, excluded);
    next.insert_or_assign(r.base.at(c), w);
    for (const Crossing& x : chain) {
      if (x.under_out == r.base.at(c)) break;
      const int over_c = r.component.at(x.over);
      const Word& over_w = prev.at(x.over);
      const Word step = Word::generator(n, excluded, over_c, x.sign).conjugated_by(over_w);
      w = (w * step).free_reduced();
      next.insert_or_assign(x.under_out, w);
    }
  }
  return next;
}

Polynomial meridian_expansion(const ReducedDiagram& r,
                              const std::map<std::string, Polynomial>& conj,
                              const std::string& rep, int n, int excluded) {
  const Polynomial& w = conj.at(rep);
  return unit_inverse(w) *
         Polynomial::one(n, excluded).times_letter(r.component.at(rep), 1) * w;
}

bool relations_hold(const ReducedDiagram& r, const Assignment& a, int n,
                    int excluded, std::string* failure) {
  const auto conj = expansions(a);
  for (const auto& [c, chain] : r.chains)
    for (const Crossing& x : chain) {
      const Polynomial m_in = meridian_expansion(r, conj, x.under_in, n, excluded);
      const Polynomial m_out = meridian_expansion(r, conj, x.under_out, n, excluded);
      Polynomial m_over = meridian_expansion(r, conj, x.over, n, excluded);
      if (x.sign < 0) m_over = unit_inverse(m_over);
      if (unit_inverse(m_over) * m_in * m_over != m_out) {
        if (failure)
          *failure = "relation at crossing under '" + x.over + "' from '" +
                     x.under_in + "' to '" + x.under_out + "' fails";
        return false;
      }
    }
  return true;
}

ConjugatorWords expand_to_all_arcs(const DiagramSpec& d, const ReducedDiagram& r,
                                   int excluded, const Assignment& reps, int sweeps) {
  ConjugatorWords out;
  out.excluded = excluded;
  out.sweeps = sweeps;
  for (const Arc& a : d.arcs) {
    if (a.component == excluded) continue;
    out.words.insert_or_assign(a.id, reps.at(r.representative.at(a.id)));
  }
  return out;
}

}  // namespace

ConjugatorWords conjugator_words(const DiagramSpec& d, int excluded) {
  const ReducedDiagram r = reduce(d, excluded);
  const int n = d.n;

  Assignment current;
  for (const auto& [id, rep] : r.representative)
    if (r.component.at(id) != excluded) current.insert_or_assign(rep, Word(n, excluded));
  auto current_exp = expansions(current);

  int changed_sweeps = 0;
  bool stable = false;
  for (int s = 1; s <= n; ++s) {
    Assignment next = sweep(r, current, n, excluded);
    auto next_exp = expansions(next);
    current = std::move(next);
    if (next_exp == current_exp) {
      stable = true;
      break;
    }
    current_exp = std::move(next_exp);
    changed_sweeps = s;
  }
  if (!stable)
    throw NonStabilizing("conjugator expansions still changing after " +
                         std::to_string(n) + " sweeps");

  std::string failure;
  if (!relations_hold(r, current, n, excluded, &failure))
    throw NonStabilizing(failure + "; the reduced group of the diagram without component " +
                         std::to_string(excluded) + " is not free on its meridians");
  return expand_to_all_arcs(d, r, excluded, current, changed_sweeps);
}

Word meridian(const DiagramSpec& d, const ConjugatorWords& cw,
              const std::string& arc) {
  auto it = cw.words.find(arc);
  if (it == cw.words.end())
    throw InvalidInput("arc '" + arc + "' has no conjugator (unknown, or on component " +
                       std::to_string(cw.excluded) + ")");
  const Word& w = it->second;
  return Word::generator(w.arity(), w.excluded(), d.component_of(arc)).conjugated_by(w);
}

bool check_wirtinger_consistency(const DiagramSpec& d, const ConjugatorWords& cw) {
  const ReducedDiagram r = reduce(d, cw.excluded);
  Assignment reps;
  for (const auto& [id, rep] : r.representative) {
    if (r.component.at(id) == cw.excluded) continue;
    if (!cw.words.count(id)) return false;
    if (id == rep) reps.insert_or_assign(rep, cw.words.at(id));
  }
  // Arcs merged by deleting component i must carry the same meridian.
  for (const auto& [id, rep] : r.representative) {
    if (r.component.at(id) == cw.excluded || id == rep) continue;
    if (magnus_expand(meridian(d, cw, id)) != magnus_expand(meridian(d, cw, rep)))
      return false;
  }
  return relations_hold(r, reps, d.n, cw.excluded, nullptr);
}

Word loop_word(const DiagramSpec& d, const ConjugatorWords& cw,
               const LoopSpec& loop) {
  Word out(d.n, cw.excluded);
  for (const auto& [arc, sign] : loop.crossings) {
    if (sign != 1 && sign != -1) throw InvalidInput("loop crossing sign must be ±1");
    if (d.component_of(arc) == cw.excluded)
      throw InvalidInput("loop crosses arc '" + arc + "' of its own component " +
                         std::to_string(cw.excluded));
    Word m = meridian(d, cw, arc);
    out *= sign > 0 ? m : m.inverse();
  }
  return out.free_reduced();
}

Word loop_word(const DiagramSpec& d, int excluded, const LoopSpec& loop) {
  return loop_word(d, conjugator_words(d, excluded), loop);
}

LinkMapPresentation presentation_from_cross_section(const CrossSection& cs) {
  cs.diagram.validate();
  LinkMapPresentation p(cs.n());
  for (const auto& [i, sings] : cs.singularities) {
    if (i < 1 || i > cs.n())
      throw InvalidInput("singularities listed for component " + std::to_string(i) +
                         " outside 1.." + std::to_string(cs.n()));
    if (sings.empty()) continue;
    const ConjugatorWords cw = conjugator_words(cs.diagram, i);
    for (const auto& s : sings) {
      const Word w = positive_normalize(loop_word(cs.diagram, cw, s.loop)).word;
      p.add(i, s.sign, WordExpr::from_word(w));
    }
  }
  return p;
}

}  // namespace kirk
