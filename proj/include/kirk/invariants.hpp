#pragma once

// The invariant pipeline for link maps given as signed singularity words:
// the based group-ring invariant S_i, its expansion E_i(L), the residues
// κ̃(I;i), the multisets K_i and K(I;i), the covering-space sum σ_i, and the
// classical two-component Kirk pair.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kirk/polynomial.hpp"
#include "kirk/word.hpp"

namespace kirk {

struct Singularity {
  int sign = 1;
  WordExpr word;
};

// Component indices are 1-based throughout the public API.
class LinkMapPresentation {
 public:
  explicit LinkMapPresentation(int n);

  int n() const noexcept { return static_cast<int>(components_.size()); }
  const std::vector<Singularity>& component(int i) const;
  std::vector<Singularity>& component(int i);
  void add(int i, int sign, WordExpr word);
  void add(int i, int sign, const std::string& word);

  // Checks every sign and every word against its component's ring.
  void validate() const;

 private:
  void check_index(int i) const;
  std::vector<std::vector<Singularity>> components_;
};

struct NormalizedSingularity {
  int sign;
  Word input;
  Word positive;
  bool inverted;
};

// Flattened, positive-normalized words of component i, in input order.
std::vector<NormalizedSingularity> normalize_component(
    const LinkMapPresentation& p, int i);

struct GroupRingTerm {
  Polynomial key;  // E_i(g) for a positive nontrivial g
  Coeff rho;
  Word witness;    // first singularity word that produced the key
};

// Σ ρ(g) (g - 1) over positive nontrivial g, keyed by expansion.
class GroupRingElement {
 public:
  GroupRingElement(int n, int i) : n_(n), i_(i) {}

  int arity() const noexcept { return n_; }
  int excluded() const noexcept { return i_; }
  // Sorted by key; no zero ρ and no trivial key.
  const std::vector<GroupRingTerm>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  void add(const Word& positive_word, Coeff rho);

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);

 private:
  int n_;
  int i_;
  std::vector<GroupRingTerm> terms_;
};

GroupRingElement s_invariant(const LinkMapPresentation& p, int i);
Polynomial e_invariant(const LinkMapPresentation& p, int i);
Residue kappa_tilde(const LinkMapPresentation& p, int i,
                    std::span<const int> sequence);

// One element of K_i: ρ(g) and the residues κ̃(I;g) over nonempty I.
// Residue values and moduli are stored sparsely (zeros omitted).
struct KEntry {
  Coeff rho = 0;
  Polynomial payload;
  std::vector<std::pair<Monomial, Coeff>> moduli;

  Residue residue_at(const Monomial& m) const;
  // "(ρ, payload)", moduli omitted.
  std::string to_string() const;

  friend bool operator==(const KEntry&, const KEntry&) = default;
  friend std::strong_ordering operator<=>(const KEntry& a, const KEntry& b);
};

// Canonically sorted multiset; duplicates are kept.
struct KMultiset {
  std::vector<KEntry> entries;

  std::string to_string() const;
  friend bool operator==(const KMultiset&, const KMultiset&) = default;
};

KEntry k_entry(const Polynomial& expansion, Coeff rho);
KMultiset k_multiset(const LinkMapPresentation& p, int i);

struct KPair {
  Coeff rho;
  Residue residue;

  std::string to_string() const;
  friend bool operator==(const KPair&, const KPair&) = default;
  friend auto operator<=>(const KPair&, const KPair&) = default;
};

// K(I;i) in two readings: every positive g with ρ(g) != 0 ("full"), and the
// same list without pairs whose residue is 0 modulo 0 ("filtered").
struct KSequence {
  std::vector<KPair> full;
  std::vector<KPair> filtered;

  friend bool operator==(const KSequence&, const KSequence&) = default;
};

std::string to_string(const std::vector<KPair>& multiset);

KSequence k_sequence(const LinkMapPresentation& p, int i,
                     std::span<const int> sequence);
KSequence k_sequence(const GroupRingElement& s, std::span<const int> sequence);

// -Σ ρ(g) (E(g) - 1)(E(g^-1) - 1)
Polynomial sigma_covering(const LinkMapPresentation& p, int i);

// Integer polynomial in t as exponent -> coefficient, zeros omitted.
using TPolynomial = std::map<int, Coeff>;
std::string to_string(const TPolynomial& p);

// (σ_1, σ_2) for a two-component link map.
std::array<TPolynomial, 2> kirk_classical(const LinkMapPresentation& p);

// Replace x_j by g^-1 x_j g in every word of every component that mentions
// x_j. Throws InvalidInput when g uses the excluded generator of such a
// component.
LinkMapPresentation basing_change(const LinkMapPresentation& p, int j,
                                  const WordExpr& g);

// Conjugate every word of component i: w -> γ^-1 w γ.
LinkMapPresentation rebase_component(const LinkMapPresentation& p, int i,
                                     const WordExpr& gamma);

}  // namespace kirk
