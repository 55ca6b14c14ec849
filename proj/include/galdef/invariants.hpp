#pragma once

#include <vector>

#include "galdef/galois.hpp"

namespace galdef {

// Machinery for the F-invariant subalgebra A^F of a Galois object A, for a
// subgroup F of G acting by restriction of the G-action. Basis classes of A
// are permuted (with root-of-unity coefficients) by F; orbits whose
// coefficients cancel out ("regular" orbits) each contribute exactly one
// invariant basis vector, and there are precisely [G:F] of those.

// One F-orbit on the canonical basis classes.
struct FOrbit {
  std::vector<InducedBasisElement> members;  // sorted ascending
  InducedBasisElement representative;        // least member
  // Stabilizer of the representative inside F; equals g C_S(s) g^-1 cap F
  // for the representative (g_i (x) x_s) with g = rep(i).
  Subgroup stabilizer;
  // Whether the orbit carries an invariant vector; decided by the regularity
  // criterion at the representative.
  bool regular = false;
};

// The canonical class of the pair (g, s): writing g = g_i t with t in S, the
// class is (i, t s t^-1).
InducedBasisElement canonicalize_class(const GaloisObject& a, int g, int s);

// Orbits of F on all basis classes, ordered by their representative.
std::vector<FOrbit> f_orbits(const GaloisObject& a, const Subgroup& f);

// Regularity via the cocycle criterion: the representative (g_i (x) x_s) is
// regular iff alpha(s,t) = alpha(t,s) for all t in C_S(s) cap g_i^-1 F g_i.
bool is_regular_orbit(const GaloisObject& a, const Subgroup& f, const FOrbit& orbit);

// Independent monomial-action check of the same property: every stabilizer
// element must act with coefficient exactly 1 on the representative line.
bool is_regular_orbit_monomial(const GaloisObject& a, const FOrbit& orbit);

// One invariant vector per regular orbit: v = sum over a least-element
// transversal Y of the stabilizer in F of act(h, representative). Vectors are
// listed in orbit order; their supports are disjoint and each contains its
// orbit representative with coefficient 1.
std::vector<MonomialVector> invariant_basis(const GaloisObject& a, const Subgroup& f);

// Number of regular orbits; always equals [G:F].
int regular_orbit_count(const GaloisObject& a, const Subgroup& f);

}  // namespace galdef
