#pragma once

#include <string>
#include <vector>

#include "galdef/galois.hpp"

namespace galdef {

// Built-in instances: small central-type data used by the self-check command,
// the test suite and the acceptance gate. Construction is deterministic, so
// element indices and labels are stable across runs.

struct CatalogInstance {
  std::string id;
  std::string description;
  GaloisObject a;
  bool small = false;  // |G| <= 24; exhaustive per-subgroup checks feasible
};

// The standard small catalog (orders 4..60): Klein-type subgroups of
// Z2xZ2, D4, A4, S4 and S3xD5 with the bilinear cocycle, trivial-cocycle
// instances with S = 1 (Z2xZ2, S3, Q8, Z6), and Z3xZ3 with the q = 3
// bilinear cocycle. Q8 carries no elementary abelian subgroup of order 4,
// so its only central-type datum is the trivial one.
std::vector<CatalogInstance> builtin_catalog();

// Symmetric-group family on 5 points, S a Klein four-subgroup: generated by
// (01)(23),(02)(13) inside the alternating group when `s_inside_alt`, by
// (01),(23) otherwise.
CatalogInstance make_symmetric5(bool s_inside_alt);

// G = A5 x| Z_p with the cyclic factor acting as conjugation by a fixed
// element x of order p, S = <x> x Z_p elementary abelian of order p^2 with
// the bilinear cocycle. p must be an element order of A5 (2, 3 or 5).
//
// Caution: conjugation by x in A5 is an inner action, so this group is
// isomorphic to A5 x Z_p and carries the central subgroup <(x^-1, z)>, which
// lies inside S. The classification is therefore never simple here; see
// make_psl28_semilinear for an extension by an outer automorphism, where the
// unique-normal-subgroup situation really occurs.
CatalogInstance make_nonsolvable(int p, int max_order = FiniteGroup::default_max_order);

// G = PSL(2,8) x| Z3, the extension of the simple group PSL(2,8) by its
// field automorphism (order 1512, trivial center, unique proper nontrivial
// normal subgroup). S = <x, y> = Z3 x Z3 where x: z -> 1/(z+1) is a rational
// map over F2 (so it commutes with the Frobenius) and y is the Frobenius
// itself; bilinear cocycle at q = 3.
CatalogInstance make_psl28_semilinear(int max_order = FiniteGroup::default_max_order);

// G = (Z_p x| Z_q) x (Z_r x| Z_q) with faithful actions (requires q | p-1 and
// q | r-1, q prime), S = Z_q x Z_q spanned by the two complements, bilinear
// cocycle. The q = 2 member of the family with (p, r) = (3, 5) is S3 x D5.
CatalogInstance make_supersolvable(int p, int q, int r,
                                   int max_order = FiniteGroup::default_max_order);

// The quaternion group of order 8 (units +-1, +-i, +-j, +-k).
GroupPtr quaternion8();

// Standard bilinear cocycle on S with the deterministic isomorphism choice.
TwoCocycle bilinear_on(const Subgroup& s, int q);

// Subgroups F against which stability is exercised: every subgroup when
// |G| <= 24, every normal subgroup otherwise.
std::vector<Subgroup> stability_test_subgroups(const GaloisObject& a);

}  // namespace galdef
