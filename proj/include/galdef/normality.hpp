#pragma once

#include <vector>

#include "galdef/invariants.hpp"

namespace galdef {

// Decision procedures for stability of the invariant subalgebra A^F under
// the Miyashita-Ulbrich G-grading, which for normal F is exactly normality of
// the corresponding Hopf subalgebra inside the deformed dual group algebra.

struct NormalityWitness {
  InducedBasisElement cls;  // a regular class whose stability condition fails
  int offender;             // least f in F outside g C_G(s) g^-1
};

struct NormalityVerdict {
  bool stable = false;
  // Representatives of the regular orbits, in canonical order.
  std::vector<InducedBasisElement> regular_classes;
  // For each failing regular class, the least offending f; empty when stable.
  std::vector<NormalityWitness> witnesses;
};

// A^F is MU-stable iff for every regular orbit representative (g_i (x) x_s)
// the whole of g_i^-1 F g_i centralizes s. Works for arbitrary subgroups F.
NormalityVerdict mu_stable_criterion(const GaloisObject& a, const Subgroup& f);

// Definition-level oracle: builds the invariant basis and checks that every
// MU-homogeneous component of every basis vector is again F-invariant.
// Exponential in nothing, but touches every vector/degree pair; intended for
// verification, not the fast path.
bool mu_stable_direct(const GaloisObject& a, const Subgroup& f);

// Normal-F specialization: the condition is g-independent and reduces to
// "every (alpha,F)-regular s in S is centralized by F". Requires F normal
// (HypothesisError otherwise). Runs both the reduced test and the general
// criterion and throws InternalError if they ever disagree.
NormalityVerdict hopf_subalgebra_normal(const GaloisObject& a, const Subgroup& f);

struct ClassificationRow {
  Subgroup f;
  int index = 0;    // [G:F]
  bool s_in_f = false;
  NormalityVerdict verdict;
};

struct ClassificationReport {
  std::vector<ClassificationRow> rows;  // proper nontrivial normal subgroups
  bool simple = false;                  // no row stable
};

// Classifies every proper nontrivial normal subgroup F of G; the deformation
// is simple iff none of them yields a stable A^F. Rows are computed
// concurrently and reported in the deterministic lattice order.
ClassificationReport is_simple_deformation(const GaloisObject& a);

// For centerless G and normal F of prime index, stability is equivalent to
// S being contained in F. Verifies the hypotheses (HypothesisError), computes
// both sides independently, and throws InternalError if they disagree.
bool prime_index_theorem_check(const GaloisObject& a, const Subgroup& f);

}  // namespace galdef
