#pragma once

// Invariant reports and comparisons, built as JSON (keys sorted by the
// container) and rendered to text from the same data.

#include <optional>
#include <string>
#include <vector>

#include "kirk/catalog.hpp"
#include "kirk/io.hpp"

namespace kirk {

inline constexpr const char* kEngineVersion = "kirk-engine 1.0.0";

struct ReportOptions {
  std::optional<int> component;          // only this component
  std::optional<std::vector<int>> sequence;  // only this κ/K(I;i) row
  bool all = false;                      // every sequence, not just nontrivial rows
  bool verbose = false;                  // normalization trace
  std::string source;                    // provenance of the input
};

Json build_report(const LinkMapPresentation& p, const ReportOptions& opt,
                  const Json& expected = Json());
std::string render_report_text(const Json& report);

struct Comparison {
  bool distinguished = false;
  std::vector<std::string> witnesses;  // "kappa_tilde(123;4): -1 vs 1"
};

// Every κ̃(I;i), K_i, K(I;i) full and filtered, and σ_i of A and B.
// Throws ArityMismatch if the component counts differ.
Comparison compare(const LinkMapPresentation& a, const LinkMapPresentation& b);
Json to_json(const Comparison& c);
std::string render_comparison_text(const Comparison& c);

// Expected values as stored by `catalog emit`.
Json expectations_to_json(const std::vector<Expectation>& e);
std::vector<Expectation> expectations_from_json(const Json& j);

}  // namespace kirk
