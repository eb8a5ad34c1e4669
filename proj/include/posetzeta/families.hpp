#pragma once

#include "posetzeta/index.hpp"
#include "posetzeta/numeric.hpp"
#include "posetzeta/poset.hpp"
#include "posetzeta/symbolic.hpp"

#include <string>
#include <vector>

namespace pz {

// ---------------------------------------------------------------------------
// Arakawa-Kaneko values at positive integers

/// A (k+1)-chain for Li_k times dx/x (labels 1, 0, ..., 0 bottom-up) whose
/// top vertex "x" also sits above n-1 pairwise incomparable label-1 vertices
/// "u1".."u{n-1}". For n = 1 this is the chain of zeta(k+1).
LabeledPoset ak_poset(unsigned k, unsigned n);

/// decompose(ak_poset(k, n)) == (n-1)! * decompose(zigzag_poset(k+1, 1^{n-1})).
bool verify_ohno(unsigned k, unsigned n);

/// Extension count of ak_poset(k, n) divided by that of its refinement with
/// the u-vertices totally ordered; must be (n-1)!.
Integer ak_antichain_factor(unsigned k, unsigned n);

// ---------------------------------------------------------------------------
// Mordell-Tornheim values

/// r chains (branch i: a label-1 bottom then k_i - 1 zeros) all below the
/// bottom of a k-chain of zeros.
LabeledPoset mt_poset(const std::vector<unsigned>& ks, unsigned k);

struct BradleyZhouReport {
  bool homogeneous = false;
  bool numeric_agreement = false;
  ZetaCombination decomposition;
  ApproxValue from_decomposition;
  ApproxValue from_series;

  bool passed() const { return homogeneous && numeric_agreement; }
};

/// Weight/depth homogeneity of decompose(mt_poset(ks, k)) plus numeric
/// agreement with the direct series at truncation M.
BradleyZhouReport verify_bradley_zhou(const std::vector<unsigned>& ks, unsigned k, long M);

// ---------------------------------------------------------------------------
// Komori-Matsumoto-Tsumura values

struct KmtShape {
  Index p; ///< top chain
  Index q; ///< left branch
  Index r; ///< right branch

  std::string to_string() const;
  bool operator==(const KmtShape&) const = default;
};

/// vertical_diagram(q) ("y" vertices) and vertical_diagram(r) ("z" vertices)
/// both below the bottom vertex "x1" of vertical_diagram(p) ("x" vertices).
/// Branch vertices are numbered top-down (y1 is the top of the q branch);
/// p vertices bottom-up. Empty q or r drops that branch.
LabeledPoset kmt_poset(const KmtShape& shape);

/// One binary split P = P_a^b + P_b^a performed while deriving the relation.
struct RefinementStep {
  LabeledPoset poset;
  std::string lower; ///< a, imposed below b in the first child
  std::string upper;
  bool identity_holds = false;
};

/// One summand X_j: the refined poset, the shape it collapses to, and the
/// number of ways the white vertices above the moved junction interleave.
struct KmtTerm {
  bool from_q_branch = true;
  unsigned j = 0;
  LabeledPoset poset;
  KmtShape reduced;
  Integer binomial_coefficient;
  Integer observed_interleavings;
  bool collapses = false; ///< decompose(poset) == binomial * decompose(kmt_poset(reduced))
};

struct KmtDerivation {
  KmtShape shape;
  LabeledPoset poset;
  std::vector<RefinementStep> steps;
  std::vector<KmtTerm> terms;
  WordCombination lhs_words;
  WordCombination rhs_words;

  bool steps_hold() const;
  bool terms_hold() const;
  bool identity_holds() const { return lhs_words == rhs_words; }
};

/// Runs the refinement chain on the words of the posets involved; valid for
/// any shape with q and r nonempty, admissible or not.
KmtDerivation derive_kmt_relation(const KmtShape& shape);

/// (LHS, RHS) as MZV combinations: LHS from the shape's poset, RHS the sum of
/// binomial multiples of the reduced shapes' decompositions. Requires the
/// shape's poset to be admissible.
std::pair<ZetaCombination, ZetaCombination> kmt_relation_lhs_rhs(const KmtShape& shape);

} // namespace pz
