#include "galdef/galois.hpp"

#include <sstream>

#include "galdef/errors.hpp"

namespace galdef {

void add_term(AlgebraElement& v, const InducedBasisElement& b, const CycInt& c) {
  auto it = v.terms.find(b);
  if (it == v.terms.end()) {
    if (!c.is_zero()) v.terms.emplace(b, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) v.terms.erase(it);
}

GaloisObject::GaloisObject(TwoCocycle alpha)
    : group_(alpha.s.group_ptr()), alpha_(std::move(alpha)), cosets_(alpha_.s) {
  auto diag = validate(alpha_);
  if (!diag.ok)
    throw HypothesisError("invalid cocycle: " + diag.message);
  if (!alpha_.inverse_normalized)
    throw HypothesisError("the cocycle must be inverse-normalized (alpha(x, x^-1) = 1)");
  if (!is_nondegenerate(alpha_))
    throw HypothesisError(
        "the cocycle is degenerate; a non-degenerate cocycle on S is required" +
        std::string([&] {
          int n = alpha_.s.order();
          int r = 1;
          while (r * r < n) ++r;
          return r * r == n ? "" : " (|S| is not a perfect square, so none exists)";
        }()));
}

InducedBasisElement GaloisObject::basis_at(int k) const {
  const int ns = alpha_.s.order();
  return {k / ns, alpha_.s.elements()[k % ns]};
}

int GaloisObject::basis_index(const InducedBasisElement& b) const {
  return b.coset * alpha_.s.order() + alpha_.s.pos(b.s);
}

bool GaloisObject::valid_basis(const InducedBasisElement& b) const {
  return b.coset >= 0 && b.coset < cosets_.count() && alpha_.s.contains(b.s);
}

std::pair<int, InducedBasisElement> GaloisObject::act_basis(
    int g, const InducedBasisElement& b) const {
  const auto& grp = *group_;
  auto [j, t] = cosets_.decompose(grp.mul(g, cosets_.rep(b.coset)));
  auto [c, sts] = twisted_conjugation(alpha_, t, b.s);
  return {c, {j, sts}};
}

MonomialVector GaloisObject::act(int g, const MonomialVector& v) const {
  MonomialVector out;
  out.modulus = v.modulus;
  for (const auto& [b, e] : v.terms) {
    auto [c, img] = act_basis(g, b);
    int exp = (e + c) % alpha_.modulus;
    bool fresh = out.terms.emplace(img, exp).second;
    if (!fresh) throw InternalError("monomial action collided on a basis element");
  }
  return out;
}

AlgebraElement GaloisObject::act(int g, const AlgebraElement& v) const {
  AlgebraElement out;
  out.modulus = v.modulus;
  for (const auto& [b, coef] : v.terms) {
    auto [c, img] = act_basis(g, b);
    add_term(out, img, coef * CycInt::root(alpha_.modulus, c));
  }
  return out;
}

std::optional<std::pair<int, InducedBasisElement>> GaloisObject::multiply_basis(
    const InducedBasisElement& a, const InducedBasisElement& b) const {
  const auto& grp = *group_;
  const int u = grp.mul(grp.inv(cosets_.rep(b.coset)), cosets_.rep(a.coset));
  if (!alpha_.s.contains(u)) return std::nullopt;
  auto [c, usu] = twisted_conjugation(alpha_, u, a.s);
  long long e = c + alpha_.exp_at(usu, b.s);
  InducedBasisElement prod{b.coset, grp.mul(usu, b.s)};
  return std::make_pair(static_cast<int>(e % alpha_.modulus), prod);
}

AlgebraElement GaloisObject::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out;
  out.modulus = alpha_.modulus;
  for (const auto& [ba, ca] : a.terms)
    for (const auto& [bb, cb] : b.terms) {
      auto prod = multiply_basis(ba, bb);
      if (!prod) continue;
      add_term(out, prod->second, ca * cb * CycInt::root(alpha_.modulus, prod->first));
    }
  return out;
}

AlgebraElement GaloisObject::multiply(const MonomialVector& a, const MonomialVector& b) const {
  return multiply(to_algebra(a), to_algebra(b));
}

int GaloisObject::mu_degree(const InducedBasisElement& b) const {
  return group_->conj(cosets_.rep(b.coset), b.s);
}

MonomialVector GaloisObject::mu_component(const MonomialVector& v, int sigma) const {
  MonomialVector out;
  out.modulus = v.modulus;
  for (const auto& [b, e] : v.terms)
    if (mu_degree(b) == sigma) out.terms.emplace(b, e);
  return out;
}

AlgebraElement GaloisObject::mu_component(const AlgebraElement& v, int sigma) const {
  AlgebraElement out;
  out.modulus = v.modulus;
  for (const auto& [b, c] : v.terms)
    if (mu_degree(b) == sigma) out.terms.emplace(b, c);
  return out;
}

MonomialVector GaloisObject::unit_monomial(const InducedBasisElement& b) const {
  MonomialVector v;
  v.modulus = alpha_.modulus;
  v.terms.emplace(b, 0);
  return v;
}

AlgebraElement GaloisObject::to_algebra(const MonomialVector& v) const {
  AlgebraElement out;
  out.modulus = v.modulus;
  for (const auto& [b, e] : v.terms)
    out.terms.emplace(b, CycInt::root(v.modulus, e));
  return out;
}

CycInt GaloisObject::action_trace(int g) const {
  CycInt tr = CycInt::zero(alpha_.modulus);
  for (int k = 0; k < basis_size(); ++k) {
    InducedBasisElement b = basis_at(k);
    auto [c, img] = act_basis(g, b);
    if (img == b) tr += CycInt::root(alpha_.modulus, c);
  }
  return tr;
}

std::string GaloisObject::class_label(const InducedBasisElement& b) const {
  std::ostringstream out;
  out << "(" << group_->label(cosets_.rep(b.coset)) << " (x) x_" << group_->label(b.s) << ")";
  return out.str();
}

std::string GaloisObject::render(const MonomialVector& v) const {
  if (v.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [b, e] : v.terms) {
    if (!first) out << " + ";
    first = false;
    if (e != 0) out << root_to_string(v.modulus, e) << "*";
    out << class_label(b);
  }
  return out.str();
}

std::string GaloisObject::render(const AlgebraElement& v) const {
  if (v.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [b, c] : v.terms) {
    if (!first) out << " + ";
    first = false;
    std::string cs = c.to_string();
    if (cs != "1") out << "[" << cs << "]*";
    out << class_label(b);
  }
  return out.str();
}

}  // namespace galdef
