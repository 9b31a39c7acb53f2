#pragma once

// Cross-section front end: Wirtinger data of a diagram, Milnor's iteration
// for conjugators of arc meridians in the reduced free group, and the
// translation of based loops into singularity words.
//
// Crossing convention: passing under arc `over` with sign ε takes the
// meridian of under_in to the meridian of under_out by
//   m_out = m_over^-ε m_in m_over^ε.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kirk/invariants.hpp"
#include "kirk/word.hpp"

namespace kirk {

struct Arc {
  std::string id;
  int component = 0;
};

struct Crossing {
  std::string over;
  std::string under_in;
  std::string under_out;
  int sign = 1;
};

struct DiagramSpec {
  int n = 0;
  std::vector<Arc> arcs;
  std::map<int, std::string> base_arcs;  // component -> arc id
  std::vector<Crossing> crossings;

  // Throws MalformedDiagram.
  void validate() const;
  int component_of(const std::string& arc) const;
};

// Signed intersections of a based loop with the diagram, in order.
struct LoopSpec {
  std::vector<std::pair<std::string, int>> crossings;
};

struct CrossSectionSingularity {
  int sign = 1;
  LoopSpec loop;
};

struct CrossSection {
  DiagramSpec diagram;
  std::map<int, std::vector<CrossSectionSingularity>> singularities;

  int n() const noexcept { return diagram.n; }
};

struct ConjugatorWords {
  int excluded = 0;
  // Arc id -> w_a with meridian(a) = w_a^-1 x_{c(a)} w_a. Arcs that merge
  // once component i is deleted share the same word.
  std::map<std::string, Word> words;
  // Sweeps that changed some expansion before the fixed point was observed.
  int sweeps = 0;
};

ConjugatorWords conjugator_words(const DiagramSpec& d, int excluded);

// Meridian word w_a^-1 x_{c(a)} w_a of one arc.
Word meridian(const DiagramSpec& d, const ConjugatorWords& cw,
              const std::string& arc);

// Every retained crossing relation, including the closing one of each
// component, holds as an equality of Magnus expansions.
bool check_wirtinger_consistency(const DiagramSpec& d, const ConjugatorWords& cw);

Word loop_word(const DiagramSpec& d, const ConjugatorWords& cw,
               const LoopSpec& loop);
Word loop_word(const DiagramSpec& d, int excluded, const LoopSpec& loop);

LinkMapPresentation presentation_from_cross_section(const CrossSection& cs);

}  // namespace kirk
