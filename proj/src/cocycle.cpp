#include "galdef/cocycle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "galdef/errors.hpp"

namespace galdef {

namespace {

int norm_exp(long long e, int m) { return static_cast<int>(((e % m) + m) % m); }

bool recheck_inverse_normalized(const TwoCocycle& a) {
  const auto& g = a.s.group();
  for (int x : a.s.elements())
    if (a.exp_at(x, g.inv(x)) != 0) return false;
  return true;
}

}  // namespace

CocycleDiagnostics validate(const TwoCocycle& alpha) {
  CocycleDiagnostics d;
  const int ns = alpha.size();
  std::ostringstream msg;
  if (alpha.modulus <= 0) {
    d.ok = false;
    d.message = "modulus must be positive";
    return d;
  }
  if (alpha.table.size() != static_cast<size_t>(ns) * ns) {
    d.ok = false;
    d.message = "table size must be |S|^2";
    return d;
  }
  for (int e : alpha.table)
    if (e < 0 || e >= alpha.modulus) {
      d.ok = false;
      d.message = "exponent out of range [0, modulus)";
      return d;
    }

  const auto& g = alpha.s.group();
  const auto& el = alpha.s.elements();
  for (int x : el) {
    if (alpha.exp_at(0, x) != 0) {
      d.ok = false;
      d.violations.push_back({-1, x, -1});
    }
    if (alpha.exp_at(x, 0) != 0) {
      d.ok = false;
      d.violations.push_back({x, -1, -1});
    }
  }
  if (!d.ok) {
    d.message = "cocycle is not normalized: alpha(1,s) = alpha(s,1) = 1 required";
    return d;
  }
  for (int r : el)
    for (int s : el)
      for (int t : el) {
        long long lhs = alpha.exp_at(r, s) + alpha.exp_at(g.mul(r, s), t);
        long long rhs = alpha.exp_at(s, t) + alpha.exp_at(r, g.mul(s, t));
        if (norm_exp(lhs, alpha.modulus) != norm_exp(rhs, alpha.modulus)) {
          d.ok = false;
          d.violations.push_back({r, s, t});
        }
      }
  if (!d.ok) {
    msg << "cocycle identity fails on " << d.violations.size() << " triple(s)";
    d.message = msg.str();
    return d;
  }
  if (alpha.inverse_normalized && !recheck_inverse_normalized(alpha)) {
    d.ok = false;
    d.message = "cocycle claims inverse normalization but alpha(x, x^-1) != 1 somewhere";
  }
  return d;
}

TwoCocycle trivial_cocycle(Subgroup s, int modulus) {
  TwoCocycle a;
  const int ns = s.order();
  a.s = std::move(s);
  a.modulus = modulus;
  a.table.assign(static_cast<size_t>(ns) * ns, 0);
  a.inverse_normalized = true;
  return a;
}

TwoCocycle lift_cocycle(const TwoCocycle& alpha, int new_modulus) {
  if (new_modulus % alpha.modulus != 0)
    throw std::invalid_argument("cocycle lift requires modulus | new_modulus");
  TwoCocycle b = alpha;
  const int k = new_modulus / alpha.modulus;
  b.modulus = new_modulus;
  for (auto& e : b.table) e *= k;
  return b;
}

OneCochain lift_cochain(const OneCochain& phi, int new_modulus) {
  if (new_modulus % phi.modulus != 0)
    throw std::invalid_argument("cochain lift requires modulus | new_modulus");
  OneCochain p = phi;
  const int k = new_modulus / phi.modulus;
  p.modulus = new_modulus;
  for (auto& e : p.exps) e *= k;
  return p;
}

TwoCocycle multiply_by_coboundary(const TwoCocycle& alpha, const OneCochain& phi) {
  if (!(alpha.s == phi.s))
    throw std::invalid_argument("cocycle and cochain live on different subgroups");
  if (phi.exps.size() != static_cast<size_t>(alpha.size()))
    throw std::invalid_argument("cochain size must be |S|");
  if (!phi.exps.empty() && phi.exps[0] != 0)
    throw std::invalid_argument("cochain must take value 1 at the identity");
  const int m = static_cast<int>(std::lcm(alpha.modulus, phi.modulus));
  TwoCocycle a = lift_cocycle(alpha, m);
  OneCochain p = lift_cochain(phi, m);

  const auto& g = a.s.group();
  TwoCocycle b = a;
  const auto& el = a.s.elements();
  for (int x : el)
    for (int y : el) {
      long long e = a.exp_at(x, y) + p.exp_at(x) + p.exp_at(y) - p.exp_at(g.mul(x, y));
      b.table[static_cast<size_t>(a.s.pos(x)) * a.size() + a.s.pos(y)] = norm_exp(e, m);
    }
  b.inverse_normalized = recheck_inverse_normalized(b);
  return b;
}

std::pair<TwoCocycle, OneCochain> normalize_inverse_pairs(const TwoCocycle& alpha) {
  const auto& g = alpha.s.group();
  const auto& el = alpha.s.elements();

  // An involution x needs 2*phi(x) = -alpha(x,x) (mod m), solvable unless the
  // modulus is even and the exponent odd; one global doubling fixes that.
  bool need_double = false;
  if (alpha.modulus % 2 == 0)
    for (int x : el)
      if (x != 0 && g.inv(x) == x && alpha.exp_at(x, x) % 2 != 0) need_double = true;
  const int m = need_double ? 2 * alpha.modulus : alpha.modulus;
  TwoCocycle a = lift_cocycle(alpha, m);

  OneCochain phi;
  phi.s = a.s;
  phi.modulus = m;
  phi.exps.assign(el.size(), 0);
  for (int x : el) {
    if (x == 0) continue;
    int xi = g.inv(x);
    if (x == xi) {
      // least f with 2f = -alpha(x,x) (mod m)
      int target = norm_exp(-a.exp_at(x, x), m);
      int f = -1;
      for (int c = 0; c < m; ++c)
        if ((2 * c) % m == target) {
          f = c;
          break;
        }
      if (f < 0)
        throw InternalError("no square root for involution after modulus doubling");
      phi.exps[a.s.pos(x)] = f;
    } else if (x < xi) {
      // phi(x) = 1 on the lower element; the cocycle identity at (x, x^-1, x)
      // forces alpha(x,x^-1) = alpha(x^-1,x), so one correction fixes both.
      phi.exps[a.s.pos(x)] = 0;
      phi.exps[a.s.pos(xi)] = norm_exp(-a.exp_at(x, xi), m);
    }
  }

  TwoCocycle b = multiply_by_coboundary(a, phi);
  if (!b.inverse_normalized)
    throw InternalError("inverse-pair normalization failed to normalize");
  return {std::move(b), std::move(phi)};
}

std::vector<int> alpha_regular_elements(const TwoCocycle& alpha) {
  std::vector<int> out;
  for (int s : alpha.s.elements()) {
    bool regular = true;
    for (int t : alpha.s.elements()) {
      if (!alpha.s.group().commute(s, t)) continue;  // t in C_S(s)
      if (alpha.exp_at(s, t) != alpha.exp_at(t, s)) {
        regular = false;
        break;
      }
    }
    if (regular) out.push_back(s);
  }
  return out;
}

bool is_nondegenerate(const TwoCocycle& alpha) {
  auto reg = alpha_regular_elements(alpha);
  return reg.size() == 1 && reg[0] == 0;
}

std::vector<int> default_bilinear_iso(const Subgroup& s, int q) {
  if (q < 2) throw HypothesisError("bilinear cocycle parameter q must be >= 2");
  for (int p = 2; p * p <= q; ++p)
    if (q % p == 0) throw HypothesisError("bilinear cocycle parameter q must be prime");
  if (s.order() != q * q)
    throw HypothesisError("S must have order q^2 for the standard bilinear cocycle");
  const auto& g = s.group();
  for (int x : s.elements())
    if (x != 0 && g.element_order(x) != q)
      throw HypothesisError("S must be elementary abelian of exponent q");

  const int u = s.elements()[1];
  Subgroup cu = Subgroup::generated(s.group_ptr(), {u});
  int v = -1;
  for (int x : s.elements())
    if (!cu.contains(x)) {
      v = x;
      break;
    }
  if (v < 0) throw HypothesisError("S is cyclic; no second generator for Z_q x Z_q");

  std::vector<int> iso(static_cast<size_t>(q) * q);
  int upow = 0;
  for (int i = 0; i < q; ++i) {
    int uv = upow;
    for (int j = 0; j < q; ++j) {
      iso[static_cast<size_t>(i) * q + j] = uv;
      uv = g.mul(uv, v);
    }
    upow = g.mul(upow, u);
  }
  return iso;
}

TwoCocycle standard_nondegenerate(int q, const Subgroup& s, const std::vector<int>& iso) {
  if (iso.size() != static_cast<size_t>(q) * q)
    throw HypothesisError("iso must assign all q^2 pairs");
  const auto& g = s.group();
  // iso must be an isomorphism Z_q x Z_q -> S.
  std::vector<char> hit(g.order(), 0);
  for (int x : iso) {
    if (!s.contains(x) || hit[x])
      throw HypothesisError("iso is not a bijection onto S");
    hit[x] = 1;
  }
  if (iso[0] != 0) throw HypothesisError("iso must send (0,0) to the identity");
  auto at = [&](int i, int j) { return iso[static_cast<size_t>(((i % q) + q) % q) * q + ((j % q) + q) % q]; };
  for (int i1 = 0; i1 < q; ++i1)
    for (int j1 = 0; j1 < q; ++j1)
      for (int i2 = 0; i2 < q; ++i2)
        for (int j2 = 0; j2 < q; ++j2)
          if (g.mul(at(i1, j1), at(i2, j2)) != at(i1 + i2, j1 + j2))
            throw HypothesisError("iso is not a homomorphism from Z_q x Z_q");

  TwoCocycle a;
  a.s = s;
  a.modulus = q;
  const int ns = s.order();
  a.table.assign(static_cast<size_t>(ns) * ns, 0);
  for (int i1 = 0; i1 < q; ++i1)
    for (int j1 = 0; j1 < q; ++j1)
      for (int i2 = 0; i2 < q; ++i2)
        for (int j2 = 0; j2 < q; ++j2) {
          int x = at(i1, j1), y = at(i2, j2);
          a.table[static_cast<size_t>(s.pos(x)) * ns + s.pos(y)] = (j1 * i2) % q;
        }
  a.inverse_normalized = recheck_inverse_normalized(a);

  auto [b, phi] = normalize_inverse_pairs(a);
  if (!is_nondegenerate(b))
    throw InternalError("standard bilinear cocycle is unexpectedly degenerate");
  return b;
}

std::pair<int, int> twisted_conjugation(const TwoCocycle& alpha, int s, int t) {
  if (!alpha.inverse_normalized)
    throw HypothesisError("twisted conjugation requires an inverse-normalized cocycle");
  const auto& g = alpha.s.group();
  const int st = g.mul(s, t);
  long long c = alpha.exp_at(s, t) + alpha.exp_at(st, g.inv(s));
  return {norm_exp(c, alpha.modulus), g.conj(s, t)};
}

bool alpha_f_regular(const TwoCocycle& alpha, const Subgroup& f, int g, int s) {
  const auto& grp = alpha.s.group();
  if (!(f.group_ptr() == alpha.s.group_ptr()))
    throw std::invalid_argument("F lives in a different group than S");
  if (!alpha.s.contains(s)) throw std::invalid_argument("s must lie in S");
  const int gi = grp.inv(g);
  for (int t : alpha.s.elements()) {
    if (!grp.commute(s, t)) continue;
    // t in g^-1 F g  <=>  g t g^-1 in F
    if (!f.contains(grp.mul(grp.mul(g, t), gi))) continue;
    if (alpha.exp_at(s, t) != alpha.exp_at(t, s)) return false;
  }
  return true;
}

std::pair<Subgroup, TwoCocycle> conjugate_pair(int g, const TwoCocycle& alpha) {
  const auto& grp = alpha.s.group();
  Subgroup sg = alpha.s.conjugated_by(g);
  TwoCocycle b;
  b.s = sg;
  b.modulus = alpha.modulus;
  const int ns = sg.order();
  b.table.assign(static_cast<size_t>(ns) * ns, 0);
  for (int x : alpha.s.elements())
    for (int y : alpha.s.elements()) {
      int gx = grp.conj(g, x), gy = grp.conj(g, y);
      b.table[static_cast<size_t>(sg.pos(gx)) * ns + sg.pos(gy)] = alpha.exp_at(x, y);
    }
  b.inverse_normalized = alpha.inverse_normalized;
  return {std::move(sg), std::move(b)};
}

}  // namespace galdef
