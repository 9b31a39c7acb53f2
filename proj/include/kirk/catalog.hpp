#pragma once

// Builders for the link maps whose invariants are known in closed form:
// the Fenn-Rolfsen link map, the Milnor-link family Y[n], the generalized
// Stirling family S[n] and its orientation reversals S^i[n], and the
// three-component link map Y. Only the component whose invariants are known
// carries singularities; the other components are left empty.

#include <optional>
#include <string>
#include <vector>

#include "kirk/invariants.hpp"
#include "kirk/wirtinger.hpp"

namespace kirk {

enum class Source {
  Literature,    // value stated in the literature for this link map
  HandComputed,  // worked out by hand from the transcribed words
  Definition,    // immediate from the definitions
};

std::string to_string(Source s);

// One expected invariant value, compared as canonical text.
struct Expectation {
  enum class Kind {
    KirkClassical,     // "(σ_1, σ_2)"
    KappaTilde,        // residue text
    ETermCount,        // number of terms of E_i(L)
    ELeadingTerm,      // "coeff*monomial" of the leading term, "none" if absent
    EInvariant,        // polynomial text
    KSequenceFull,     // multiset text
    KSequenceFiltered,
    KMultiset,
    Sigma,             // polynomial text
  };

  Kind kind;
  int component = 0;
  std::vector<int> sequence;
  std::string expected;
  Source source = Source::Literature;

  std::string label() const;
};

std::string evaluate(const Expectation& e, const LinkMapPresentation& p);

struct CatalogEntry {
  std::string name;
  int n = 0;
  std::optional<int> reversed;
  LinkMapPresentation presentation;
  // Component whose singularities are transcribed.
  int authoritative_component = 0;
  std::vector<Expectation> expected;
};

CatalogEntry build_fenn_rolfsen();
CatalogEntry build_y(int n);
CatalogEntry build_stirling(int n);
CatalogEntry build_stirling_reversed(int n, int reversed);
CatalogEntry build_y3();

struct CatalogInfo {
  std::string name;
  std::string parameters;
  std::string description;
};
std::vector<CatalogInfo> catalog_names();

// Dispatch by name as used on the command line.
CatalogEntry build_catalog_entry(const std::string& name, std::optional<int> n,
                                 std::optional<int> reversed);

// Cross-section fixtures for the diagram front end.
CrossSection fenn_rolfsen_cross_section();
CrossSection y3_cross_section();
// Y[n] slice: n-1 unlinked round components and a loop tracing Milnor's link.
CrossSection milnor_link_cross_section(int n);

}  // namespace kirk
