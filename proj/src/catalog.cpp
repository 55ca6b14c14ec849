#include "galdef/catalog.hpp"

#include <algorithm>

#include "galdef/errors.hpp"

namespace galdef {

namespace {

int must_find(const FiniteGroup& g, const std::string& label) {
  auto idx = g.find_element(label);
  if (!idx) throw InternalError("catalog element not found: " + label);
  return *idx;
}

Subgroup span(const GroupPtr& g, const std::vector<std::string>& labels) {
  std::vector<int> gens;
  gens.reserve(labels.size());
  for (const auto& l : labels) gens.push_back(must_find(*g, l));
  return Subgroup::generated(g, gens);
}

CatalogInstance instance(std::string id, std::string description, TwoCocycle alpha) {
  GaloisObject a(std::move(alpha));
  bool small = a.group().order() <= 24;
  return {std::move(id), std::move(description), std::move(a), small};
}

}  // namespace

GroupPtr quaternion8() {
  // index = 2*axis + (sign < 0); axes 0..3 = 1, i, j, k
  static const int axis_mul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {
      {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax = a / 2, bx = b / 2;
      int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign_mul[ax][bx];
      table[a][b] = 2 * axis_mul[ax][bx] + (sign < 0 ? 1 : 0);
    }
  return FiniteGroup::from_table(
      std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, "quaternion:8");
}

TwoCocycle bilinear_on(const Subgroup& s, int q) {
  return standard_nondegenerate(q, s, default_bilinear_iso(s, q));
}

std::vector<CatalogInstance> builtin_catalog() {
  std::vector<CatalogInstance> out;

  {
    auto g = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    Subgroup s = Subgroup::whole(g);
    out.push_back(instance("klein-z2z2", "G = S = Z2 x Z2, bilinear cocycle",
                           bilinear_on(s, 2)));
  }
  {
    auto g = FiniteGroup::dihedral(4);
    out.push_back(instance("klein-dihedral", "G = D4, S = {e, r^2, f, r^2f}",
                           bilinear_on(span(g, {"r^2", "f"}), 2)));
  }
  {
    auto g = FiniteGroup::dihedral(4);
    out.push_back(instance("d4-klein-alt", "G = D4, S = {e, r^2, rf, r^3f}",
                           bilinear_on(span(g, {"r^2", "rf"}), 2)));
  }
  {
    auto g = FiniteGroup::symmetric(4);
    out.push_back(instance("s4-klein-normal", "G = S4, S the normal Klein subgroup",
                           bilinear_on(span(g, {"(01)(23)", "(02)(13)"}), 2)));
  }
  {
    auto g = FiniteGroup::symmetric(4);
    out.push_back(instance("s4-klein-nonnormal", "G = S4, S = <(01),(23)>",
                           bilinear_on(span(g, {"(01)", "(23)"}), 2)));
  }
  {
    auto g = FiniteGroup::alternating(4);
    out.push_back(instance("a4-klein", "G = A4, S the Klein subgroup",
                           bilinear_on(span(g, {"(01)(23)", "(02)(13)"}), 2)));
  }
  {
    // Same subgroup, generators swapped in the isomorphism: a different
    // (cohomologous) table exercising iso-dependence of the raw data.
    auto g = FiniteGroup::alternating(4);
    Subgroup s = span(g, {"(01)(23)", "(02)(13)"});
    auto def = default_bilinear_iso(s, 2);
    std::vector<int> swapped(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) swapped[i * 2 + j] = def[j * 2 + i];
    out.push_back(instance("a4-klein-swapped", "G = A4, Klein S, swapped generators",
                           standard_nondegenerate(2, s, swapped)));
  }
  {
    auto g = FiniteGroup::direct_product(FiniteGroup::symmetric(3), FiniteGroup::dihedral(5));
    out.push_back(instance("s3xd5-klein", "G = S3 x D5, S = <((01),e), (e,f)>",
                           bilinear_on(span(g, {"((01),e)", "(e,f)"}), 2)));
  }
  {
    auto g = FiniteGroup::direct_product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(3));
    Subgroup s = Subgroup::whole(g);
    out.push_back(instance("z3z3-full", "G = S = Z3 x Z3, bilinear cocycle (odd q)",
                           bilinear_on(s, 3)));
  }
  {
    auto g = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    out.push_back(instance("trivial-z2z2", "G = Z2 x Z2, S = 1, trivial cocycle",
                           trivial_cocycle(Subgroup::trivial(g))));
  }
  {
    auto g = FiniteGroup::symmetric(3);
    out.push_back(instance("trivial-s3", "G = S3, S = 1, trivial cocycle",
                           trivial_cocycle(Subgroup::trivial(g))));
  }
  {
    auto g = quaternion8();
    out.push_back(instance("trivial-q8", "G = Q8, S = 1, trivial cocycle",
                           trivial_cocycle(Subgroup::trivial(g))));
  }
  {
    auto g = FiniteGroup::cyclic(6);
    out.push_back(instance("trivial-z6", "G = Z6, S = 1, trivial cocycle",
                           trivial_cocycle(Subgroup::trivial(g))));
  }
  return out;
}

CatalogInstance make_symmetric5(bool s_inside_alt) {
  auto g = FiniteGroup::symmetric(5);
  Subgroup s = s_inside_alt ? span(g, {"(01)(23)", "(02)(13)"})
                            : span(g, {"(01)", "(23)"});
  return instance(s_inside_alt ? "s5-klein-alt" : "s5-klein-nonalt",
                  s_inside_alt ? "G = S5, S = <(01)(23),(02)(13)> inside A5"
                               : "G = S5, S = <(01),(23)>",
                  bilinear_on(s, 2));
}

CatalogInstance make_nonsolvable(int p, int max_order) {
  auto n = FiniteGroup::alternating(5, max_order);
  std::string xlabel;
  if (p == 2) xlabel = "(01)(23)";
  else if (p == 3) xlabel = "(012)";
  else if (p == 5) xlabel = "(01234)";
  else throw HypothesisError("p must be an element order of A5: 2, 3 or 5");
  const int x = must_find(*n, xlabel);

  auto h = FiniteGroup::cyclic(p);
  // action[k] = conjugation by x^k
  std::vector<std::vector<int>> action(p, std::vector<int>(n->order()));
  int xk = 0;
  for (int k = 0; k < p; ++k) {
    for (int y = 0; y < n->order(); ++y) action[k][y] = n->conj(xk, y);
    xk = n->mul(xk, x);
  }
  auto g = FiniteGroup::semidirect_product(n, h, action, max_order);

  // S = <(x, e), (e, z)>, elementary abelian of order p^2 since conjugation
  // by x fixes x.
  Subgroup s = Subgroup::generated(g, {x * p, 1});
  return instance("a5-semidirect-z" + std::to_string(p),
                  "G = A5 x| Z" + std::to_string(p) + " (conjugation by " + xlabel +
                      "), S = <x> x Z" + std::to_string(p),
                  bilinear_on(s, p));
}

CatalogInstance make_psl28_semilinear(int max_order) {
  // The projective line over F8 as 9 points: 0..7 are the field elements
  // written as bit masks over F2[t]/(t^3 + t + 1), 8 is the point at
  // infinity.
  auto fmul = [](int a, int b) {
    int r = 0;
    for (int i = 0; i < 3; ++i)
      if (b & (1 << i)) r ^= a << i;
    for (int i = 5; i >= 3; --i)
      if (r & (1 << i)) r ^= (0b1011 << (i - 3));  // reduce by t^3 + t + 1
    return r;
  };
  auto finv = [&](int a) {
    int r = 1;
    for (int i = 0; i < 6; ++i) r = fmul(r, a);  // a^6 = a^-1 in F8*
    return r;
  };

  const int inf = 8;
  std::vector<int> add1(9), mul_t(9), inv(9), frob(9);
  for (int z = 0; z < 8; ++z) {
    add1[z] = z ^ 1;
    mul_t[z] = fmul(z, 2);
    inv[z] = z == 0 ? inf : finv(z);
    frob[z] = fmul(z, z);
  }
  add1[inf] = mul_t[inf] = frob[inf] = inf;
  inv[inf] = 0;

  auto g = FiniteGroup::from_generators(9, {add1, mul_t, inv, frob},
                                        "psemilinear:2,8", max_order);
  if (g->order() != 1512)
    throw InternalError("PSL(2,8) x| Z3 should have order 1512");

  // x: z -> 1/(z + 1), the composition of z+1 then inversion.
  std::vector<int> x_img(9);
  for (int z = 0; z < 9; ++z) x_img[z] = inv[add1[z]];
  const int x = must_find(*g, cycle_label(x_img));
  const int y = must_find(*g, cycle_label(frob));
  Subgroup s = Subgroup::generated(g, {x, y});
  if (s.order() != 9) throw InternalError("S should be Z3 x Z3 inside PSL(2,8) x| Z3");
  return instance("psl28-semilinear",
                  "G = PSL(2,8) x| Z3 (field automorphism), S = Z3 x Z3",
                  bilinear_on(s, 3));
}

namespace {

GroupPtr cyclic_semidirect(int p, int q, int max_order) {
  // Z_p x| Z_q via n -> n^k with k of multiplicative order q mod p.
  int k = -1;
  for (int c = 2; c < p; ++c) {
    long long pw = 1;
    bool proper = true;
    for (int j = 1; j < q; ++j) {
      pw = pw * c % p;
      if (pw == 1) proper = false;
    }
    if (proper && pw * c % p == 1) {
      k = c;
      break;
    }
  }
  if (k < 0)
    throw HypothesisError("no faithful action: q must divide p - 1 (q prime)");
  auto n = FiniteGroup::cyclic(p);
  auto h = FiniteGroup::cyclic(q);
  std::vector<std::vector<int>> action(q, std::vector<int>(p));
  long long kpow = 1;
  for (int hh = 0; hh < q; ++hh) {
    for (int x = 0; x < p; ++x) action[hh][x] = static_cast<int>(x * kpow % p);
    kpow = kpow * k % p;
  }
  return FiniteGroup::semidirect_product(n, h, action, max_order);
}

}  // namespace

CatalogInstance make_supersolvable(int p, int q, int r, int max_order) {
  auto check_prime = [](int v, const char* what) {
    if (v < 2) throw HypothesisError(std::string(what) + " must be prime");
    for (int d = 2; d * d <= v; ++d)
      if (v % d == 0) throw HypothesisError(std::string(what) + " must be prime");
  };
  check_prime(p, "p");
  check_prime(q, "q");
  check_prime(r, "r");
  if ((p - 1) % q != 0 || (r - 1) % q != 0)
    throw HypothesisError("supersolvable family requires q | p-1 and q | r-1");

  auto g1 = cyclic_semidirect(p, q, max_order);
  auto g2 = cyclic_semidirect(r, q, max_order);
  auto g = FiniteGroup::direct_product(g1, g2, max_order);

  // The two Z_q complements: (0,1) has index 1 inside each factor.
  Subgroup s = Subgroup::generated(g, {1 * g2->order(), 1});
  return instance("supersolvable-" + std::to_string(p) + "-" + std::to_string(q) +
                      "-" + std::to_string(r),
                  "G = (Z" + std::to_string(p) + " x| Z" + std::to_string(q) +
                      ") x (Z" + std::to_string(r) + " x| Z" + std::to_string(q) +
                      "), S = Zq x Zq",
                  bilinear_on(s, q));
}

std::vector<Subgroup> stability_test_subgroups(const GaloisObject& a) {
  return a.group().order() <= 24 ? all_subgroups(a.group_ptr())
                                 : normal_subgroups(a.group_ptr());
}

}  // namespace galdef
