#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "galdef/cocycle.hpp"
#include "galdef/cyclotomic.hpp"
#include "galdef/group.hpp"

namespace galdef {

// One basis vector g_i (x) x_s of the induced algebra: `coset` indexes a left
// coset representative of S in G, `s` is the parent-group index of an element
// of S. Ordering is (coset, s), which fixes the canonical basis enumeration.
struct InducedBasisElement {
  int coset = 0;
  int s = 0;
  auto operator<=>(const InducedBasisElement&) const = default;
};

// Sparse vector whose coefficients are single roots of unity, stored as
// exponents modulo `modulus`. The G-action is monomial, so it stays in this
// class; sums of such vectors generally do not and live in AlgebraElement.
struct MonomialVector {
  int modulus = 1;
  std::map<InducedBasisElement, int> terms;

  friend bool operator==(const MonomialVector& a, const MonomialVector& b) {
    return a.modulus == b.modulus && a.terms == b.terms;
  }
};

// Sparse vector with exact cyclotomic-integer coefficients; zero coefficients
// are never stored.
struct AlgebraElement {
  int modulus = 1;
  std::map<InducedBasisElement, CycInt> terms;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.modulus == b.modulus && a.terms == b.terms;
  }
};

void add_term(AlgebraElement& v, const InducedBasisElement& b, const CycInt& c);

// The algebra kG tensor_{kS} k_alpha S for a finite group G, subgroup S and
// non-degenerate inverse-normalized 2-cocycle alpha on S. Basis vectors are
// (coset rep) (x) x_s; G acts monomially, multiplication is the induced
// twisted product, and the algebra carries a G-grading (the Miyashita-Ulbrich
// degree) given by |g_i (x) x_s| = g_i s g_i^-1. Immutable once built.
class GaloisObject {
 public:
  // G and S are implied by the cocycle. Throws HypothesisError when alpha is
  // degenerate or not inverse-normalized.
  explicit GaloisObject(TwoCocycle alpha);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const Subgroup& s() const { return alpha_.s; }
  const TwoCocycle& cocycle() const { return alpha_; }
  const CosetDecomposition& cosets() const { return cosets_; }
  int modulus() const { return alpha_.modulus; }
  int dim() const { return group_->order(); }

  // Canonical basis enumeration: index k = coset * |S| + position of s in S.
  int basis_size() const { return dim(); }
  InducedBasisElement basis_at(int k) const;
  int basis_index(const InducedBasisElement& b) const;
  bool valid_basis(const InducedBasisElement& b) const;

  // g . (g_i (x) x_s): writes g*g_i = g_j t with t in S; the image is
  // g_j (x) x_{t s t^-1} with coefficient zeta^(alpha(t,s) + alpha(ts, t^-1)).
  std::pair<int, InducedBasisElement> act_basis(int g, const InducedBasisElement& b) const;
  MonomialVector act(int g, const MonomialVector& v) const;
  AlgebraElement act(int g, const AlgebraElement& v) const;

  // (g_i (x) x_s)(g_j (x) x_t): zero unless u = g_j^-1 g_i lies in S, in
  // which case the product is zeta^c * alpha(usu^-1, t) (g_j (x) x_{usu^-1 t})
  // where (c, usu^-1) is the twisted conjugation of x_s by u. Returns
  // (exponent, basis element) or nullopt for the zero product.
  std::optional<std::pair<int, InducedBasisElement>> multiply_basis(
      const InducedBasisElement& a, const InducedBasisElement& b) const;
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement multiply(const MonomialVector& a, const MonomialVector& b) const;

  // Miyashita-Ulbrich degree and homogeneous components.
  int mu_degree(const InducedBasisElement& b) const;
  MonomialVector mu_component(const MonomialVector& v, int sigma) const;
  AlgebraElement mu_component(const AlgebraElement& v, int sigma) const;

  MonomialVector unit_monomial(const InducedBasisElement& b) const;
  AlgebraElement to_algebra(const MonomialVector& v) const;

  // Trace of the action matrix of g over Z[zeta_m]; |G| at g = 1 and 0
  // otherwise, because the action is the regular representation.
  CycInt action_trace(int g) const;

  std::string class_label(const InducedBasisElement& b) const;
  std::string render(const MonomialVector& v) const;
  std::string render(const AlgebraElement& v) const;

 private:
  GroupPtr group_;
  TwoCocycle alpha_;
  CosetDecomposition cosets_;
};

}  // namespace galdef
