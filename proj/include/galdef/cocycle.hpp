#pragma once

#include <string>
#include <utility>
#include <vector>

#include "galdef/group.hpp"

namespace galdef {

// A normalized 2-cocycle on a subgroup S with values in the m-th roots of
// unity, stored as the |S| x |S| table of exponents: alpha(s,t) = zeta_m^e.
// Rows/columns are indexed by position within S.elements(). The cocycle
// identity used throughout is
//     alpha(r,s) * alpha(rs,t) = alpha(s,t) * alpha(r,st)
// and "normalized" means alpha(1,s) = alpha(s,1) = 1.
struct TwoCocycle {
  Subgroup s;
  int modulus = 1;
  std::vector<int> table;  // |S|^2 exponents in [0, modulus)
  // True when additionally alpha(x, x^-1) = 1 for every x (so the basis
  // element attached to x^-1 inverts the one attached to x).
  bool inverse_normalized = false;

  int size() const { return s.order(); }
  int exp_at_pos(int i, int j) const { return table[static_cast<size_t>(i) * size() + j]; }
  // By parent-group element index; both must lie in S.
  int exp_at(int x, int y) const { return exp_at_pos(s.pos(x), s.pos(y)); }
};

// A 1-cochain phi: S -> mu_m as exponents by position; phi(1) = 1 always.
struct OneCochain {
  Subgroup s;
  int modulus = 1;
  std::vector<int> exps;

  int exp_at(int x) const { return exps[s.pos(x)]; }
};

struct CocycleViolation {
  // Cocycle-identity violation at (r, s, t), or a normalization violation
  // reported as (x, -1, -1) / (-1, x, -1) for a bad row/column at x.
  int r, s, t;
};

struct CocycleDiagnostics {
  bool ok = true;
  std::vector<CocycleViolation> violations;
  std::string message;
};

// Checks table shape, exponent range, normalization and the cocycle identity
// over all |S|^3 triples. Never throws; reports everything it finds.
CocycleDiagnostics validate(const TwoCocycle& alpha);

TwoCocycle trivial_cocycle(Subgroup s, int modulus = 1);

// Same values seen in a larger root-of-unity group: exponents scale by
// new_modulus / modulus. Requires modulus | new_modulus.
TwoCocycle lift_cocycle(const TwoCocycle& alpha, int new_modulus);
OneCochain lift_cochain(const OneCochain& phi, int new_modulus);

// beta(x,y) = alpha(x,y) * phi(x) phi(y) phi(xy)^-1. Moduli are merged by
// lifting both sides to lcm.
TwoCocycle multiply_by_coboundary(const TwoCocycle& alpha, const OneCochain& phi);

// Adjusts alpha by a coboundary so that beta(x, x^-1) = 1 for every x.
// For each pair {x, x^-1} with x != x^-1 the cochain takes phi(x) = 1 on the
// lower-indexed element and phi(x^-1) = alpha(x, x^-1)^-1 on the other; an
// involution x needs phi(x)^2 = alpha(x,x)^-1, which forces doubling the
// modulus when alpha(x,x) is an odd power at even modulus. Returns (beta, phi)
// at the final (possibly doubled) modulus.
std::pair<TwoCocycle, OneCochain> normalize_inverse_pairs(const TwoCocycle& alpha);

// Elements s with alpha(s,t) = alpha(t,s) for every t in the centralizer of s
// within S. Always a union of S-conjugacy classes containing 1.
std::vector<int> alpha_regular_elements(const TwoCocycle& alpha);

// alpha is non-degenerate iff 1 is the only alpha-regular element; possible
// only when |S| is a perfect square.
bool is_nondegenerate(const TwoCocycle& alpha);

// The standard non-degenerate cocycle on S isomorphic to Z_q x Z_q:
//   alpha(u^i1 v^j1, u^i2 v^j2) = zeta_q^(j1 * i2),
// inverse-pair normalized before returning (modulus 2q when q = 2).
// `iso` maps (i, j) -> element index as iso[i*q + j]; it must be a group
// isomorphism from Z_q x Z_q (verified).
TwoCocycle standard_nondegenerate(int q, const Subgroup& s, const std::vector<int>& iso);

// Deterministic isomorphism for standard_nondegenerate: u is the least
// non-identity element of S, v the least element outside <u>. Throws
// HypothesisError unless S is elementary abelian of order q^2.
std::vector<int> default_bilinear_iso(const Subgroup& s, int q);

// x_s x_t x_s^-1 = zeta^c x_{s t s^-1} with c = alpha(s,t) + alpha(st, s^-1).
// Requires an inverse-normalized cocycle (so x_s^-1 = x_{s^-1}).
// Returns (c, s t s^-1).
std::pair<int, int> twisted_conjugation(const TwoCocycle& alpha, int s, int t);

// alpha(s,t) = alpha(t,s) for all t in C_S(s) cap g^-1 F g.
bool alpha_f_regular(const TwoCocycle& alpha, const Subgroup& f, int g, int s);

// The conjugate datum (gSg^-1, alpha^g) with alpha^g(gsg^-1, gtg^-1) = alpha(s,t).
std::pair<Subgroup, TwoCocycle> conjugate_pair(int g, const TwoCocycle& alpha);

}  // namespace galdef
