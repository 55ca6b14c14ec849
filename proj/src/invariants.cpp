#include "galdef/invariants.hpp"

#include <algorithm>

#include "galdef/errors.hpp"

namespace galdef {

InducedBasisElement canonicalize_class(const GaloisObject& a, int g, int s) {
  if (!a.s().contains(s)) throw std::invalid_argument("class element s must lie in S");
  auto [i, t] = a.cosets().decompose(g);
  return {i, a.group().conj(t, s)};
}

std::vector<FOrbit> f_orbits(const GaloisObject& a, const Subgroup& f) {
  if (!(f.group_ptr() == a.group_ptr()))
    throw std::invalid_argument("F must be a subgroup of the same group");
  const auto& grp = a.group();
  const int n = a.basis_size();
  const auto fgens = f.small_generating_set();

  std::vector<char> seen(n, 0);
  std::vector<FOrbit> orbits;
  for (int k0 = 0; k0 < n; ++k0) {
    if (seen[k0]) continue;
    // BFS from the least unvisited class; every class visited earlier belongs
    // to an earlier orbit, so k0 is the least member of this one.
    FOrbit orbit;
    std::vector<int> queue{k0};
    seen[k0] = 1;
    for (size_t q = 0; q < queue.size(); ++q) {
      InducedBasisElement b = a.basis_at(queue[q]);
      orbit.members.push_back(b);
      for (int h : fgens) {
        int img = a.basis_index(a.act_basis(h, b).second);
        if (!seen[img]) {
          seen[img] = 1;
          queue.push_back(img);
        }
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.representative = orbit.members.front();

    // Stabilizer of the representative: f fixes (g_i (x) x_s) iff
    // g_i^-1 f g_i lies in C_S(s), i.e. f in g_i C_S(s) g_i^-1.
    const int g = a.cosets().rep(orbit.representative.coset);
    const int s = orbit.representative.s;
    const int gi = grp.inv(g);
    std::vector<int> stab;
    for (int x : f.elements()) {
      int y = grp.mul(grp.mul(gi, x), g);
      if (a.s().contains(y) && grp.commute(y, s)) stab.push_back(x);
    }
    orbit.stabilizer = Subgroup(a.group_ptr(), std::move(stab));
    orbit.regular = alpha_f_regular(a.cocycle(), f, g, s);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

bool is_regular_orbit(const GaloisObject& a, const Subgroup& f, const FOrbit& orbit) {
  return alpha_f_regular(a.cocycle(), f, a.cosets().rep(orbit.representative.coset),
                         orbit.representative.s);
}

bool is_regular_orbit_monomial(const GaloisObject& a, const FOrbit& orbit) {
  for (int sigma : orbit.stabilizer.elements()) {
    auto [c, img] = a.act_basis(sigma, orbit.representative);
    if (!(img == orbit.representative))
      throw InternalError("stabilizer element moved the orbit representative");
    if (c != 0) return false;
  }
  return true;
}

std::vector<MonomialVector> invariant_basis(const GaloisObject& a, const Subgroup& f) {
  std::vector<MonomialVector> basis;
  for (const auto& orbit : f_orbits(a, f)) {
    if (!orbit.regular) continue;
    // Least-element transversal of the stabilizer in F (left cosets h*Stab).
    const auto& grp = a.group();
    std::vector<char> covered(grp.order(), 0);
    MonomialVector v;
    v.modulus = a.modulus();
    for (int h : f.elements()) {
      if (covered[h]) continue;
      for (int t : orbit.stabilizer.elements()) covered[grp.mul(h, t)] = 1;
      auto [c, img] = a.act_basis(h, orbit.representative);
      bool fresh = v.terms.emplace(img, c).second;
      if (!fresh) throw InternalError("transversal hit a basis class twice");
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int regular_orbit_count(const GaloisObject& a, const Subgroup& f) {
  int count = 0;
  for (const auto& orbit : f_orbits(a, f))
    if (orbit.regular) ++count;
  return count;
}

}  // namespace galdef
