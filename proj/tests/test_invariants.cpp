#include <doctest.h>

#include <set>
#include <vector>

#include "galdef/cocycle.hpp"
#include "galdef/galois.hpp"
#include "galdef/group.hpp"
#include "galdef/invariants.hpp"

using namespace galdef;

namespace {

GaloisObject klein_object() {
  auto g = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  Subgroup s = Subgroup::whole(g);
  return GaloisObject(standard_nondegenerate(2, s, default_bilinear_iso(s, 2)));
}

GaloisObject dihedral_object() {
  auto g = FiniteGroup::dihedral(4);
  Subgroup s = Subgroup::generated(g, {g->find_element("r^2").value(), g->find_element("f").value()});
  return GaloisObject(standard_nondegenerate(2, s, default_bilinear_iso(s, 2)));
}

// Reference invariance check: act(f, v) == v for every f in F.
bool is_invariant(const GaloisObject& a, const Subgroup& f, const MonomialVector& v) {
  for (int x : f.elements())
    if (!(a.act(x, v) == v)) return false;
  return true;
}

}  // namespace

TEST_CASE("trivial F makes every class its own regular orbit") {
  GaloisObject a = klein_object();
  Subgroup f = Subgroup::trivial(a.group_ptr());
  auto orbits = f_orbits(a, f);
  REQUIRE(orbits.size() == 4);
  for (const auto& o : orbits) {
    CHECK(o.members.size() == 1);
    CHECK(o.representative == o.members[0]);
    CHECK(o.stabilizer.order() == 1);
    CHECK(o.regular);
  }
  CHECK(regular_orbit_count(a, f) == 4);
  auto basis = invariant_basis(a, f);
  REQUIRE(basis.size() == 4);
  for (size_t i = 0; i < basis.size(); ++i) {
    CHECK(basis[i].terms.size() == 1);
    CHECK(basis[i].terms.begin()->first == a.basis_at(static_cast<int>(i)));
    CHECK(basis[i].terms.begin()->second == 0);
  }
}

TEST_CASE("F = <a> on the Klein object keeps exactly the commuting classes") {
  GaloisObject a = klein_object();
  Subgroup f = Subgroup::generated(a.group_ptr(), {1});
  auto orbits = f_orbits(a, f);
  // G abelian: every class is fixed by conjugation, so orbits are singletons
  // and regularity is a pure phase condition.
  REQUIRE(orbits.size() == 4);
  std::vector<bool> expected_regular = {true, true, false, false};  // x_1, x_a, x_b, x_c
  for (size_t i = 0; i < 4; ++i) {
    CHECK(orbits[i].members.size() == 1);
    CHECK(orbits[i].stabilizer.order() == 2);
    CHECK(orbits[i].regular == expected_regular[i]);
    CHECK(is_regular_orbit(a, f, orbits[i]) == is_regular_orbit_monomial(a, orbits[i]));
  }

  CHECK(regular_orbit_count(a, f) == 2);  // = [G:F]
  auto basis = invariant_basis(a, f);
  REQUIRE(basis.size() == 2);
  // The invariant lines are spanned by x_1 and x_a themselves.
  CHECK(basis[0].terms.size() == 1);
  CHECK(basis[0].terms.begin()->first == InducedBasisElement{0, 0});
  CHECK(basis[1].terms.size() == 1);
  CHECK(basis[1].terms.begin()->first == InducedBasisElement{0, 1});
  for (const auto& v : basis) CHECK(is_invariant(a, f, v));
}

TEST_CASE("rotation subgroup of D4: orbits, stabilizers, invariant dimension") {
  GaloisObject a = dihedral_object();
  const auto& g = a.group();
  int r = g.find_element("r").value();
  int r2 = g.find_element("r^2").value();
  Subgroup f = Subgroup::generated(a.group_ptr(), {r});
  REQUIRE(f.order() == 4);

  auto orbits = f_orbits(a, f);
  CHECK(regular_orbit_count(a, f) == 2);  // [G:F] = 8/4

  // The two regular orbits are the singletons on the central classes x_1, x_{r^2}.
  std::vector<const FOrbit*> regular;
  size_t total_members = 0;
  for (const auto& o : orbits) {
    total_members += o.members.size();
    // Orbit sizes multiply out against stabilizers (orbit-stabilizer).
    CHECK(o.members.size() * o.stabilizer.order() == static_cast<size_t>(f.order()));
    CHECK(is_regular_orbit(a, f, o) == is_regular_orbit_monomial(a, o));
    if (o.regular) regular.push_back(&o);
  }
  CHECK(total_members == static_cast<size_t>(a.basis_size()));
  REQUIRE(regular.size() == 2);
  CHECK(regular[0]->representative == InducedBasisElement{0, 0});
  CHECK(regular[1]->representative == InducedBasisElement{0, r2});
  // r moves the trivial coset to the r-coset, so each regular orbit pairs
  // (e (x) x_s) with (r (x) x_s); the stabilizer is F cap S = {e, r^2}.
  CHECK(regular[0]->members == std::vector<InducedBasisElement>{{0, 0}, {1, 0}});
  CHECK(regular[1]->members == std::vector<InducedBasisElement>{{0, r2}, {1, r2}});
  CHECK(regular[0]->stabilizer.elements() == std::vector<int>{0, r2});

  auto basis = invariant_basis(a, f);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) CHECK(is_invariant(a, f, v));
}

TEST_CASE("orbit structure invariants hold across many (object, F) pairs") {
  std::vector<GaloisObject> objects;
  objects.push_back(klein_object());
  objects.push_back(dihedral_object());

  for (const auto& a : objects) {
    for (const auto& f : all_subgroups(a.group_ptr())) {
      auto orbits = f_orbits(a, f);

      // Orbits partition the basis and are listed by ascending representative.
      std::set<InducedBasisElement> seen;
      const FOrbit* prev = nullptr;
      int regular_count = 0;
      for (const auto& o : orbits) {
        REQUIRE(!o.members.empty());
        CHECK(o.representative == o.members.front());
        CHECK(std::is_sorted(o.members.begin(), o.members.end()));
        if (prev) CHECK(prev->representative < o.representative);
        prev = &o;
        for (const auto& m : o.members) CHECK(seen.insert(m).second);

        // Stabilizer really stabilizes: the F-image set of the representative
        // has exactly |F| / |stab| distinct classes.
        std::set<InducedBasisElement> image;
        for (int x : f.elements()) {
          auto [c, im] = a.act_basis(x, o.representative);
          image.insert(im);
        }
        CHECK(image.size() == o.members.size());
        for (int x : o.stabilizer.elements()) {
          auto [c, im] = a.act_basis(x, o.representative);
          CHECK(im == o.representative);
        }

        CHECK(is_regular_orbit(a, f, o) == is_regular_orbit_monomial(a, o));
        if (o.regular) ++regular_count;
      }
      CHECK(seen.size() == static_cast<size_t>(a.basis_size()));

      // Dimension law: number of regular orbits = [G:F].
      CHECK(regular_count == a.group().order() / f.order());
      CHECK(regular_orbit_count(a, f) == regular_count);

      // The invariant basis: one vector per regular orbit, disjoint supports,
      // representative coefficient 1, each vector genuinely F-invariant.
      auto basis = invariant_basis(a, f);
      CHECK(basis.size() == static_cast<size_t>(regular_count));
      std::set<InducedBasisElement> support;
      size_t bi = 0;
      for (const auto& o : orbits) {
        if (!o.regular) continue;
        const auto& v = basis[bi++];
        CHECK(v.terms.size() == o.members.size());
        CHECK(v.terms.count(o.representative) == 1);
        CHECK(v.terms.at(o.representative) == 0);
        for (const auto& [b, e] : v.terms) {
          CHECK(support.insert(b).second);
          CHECK(std::find(o.members.begin(), o.members.end(), b) != o.members.end());
        }
        CHECK(is_invariant(a, f, v));
      }
    }
  }
}

TEST_CASE("invariant vectors span a subalgebra") {
  // Products of invariants are invariant; expand products of the invariant
  // basis and check every component is again fixed by the F-action.
  GaloisObject a = dihedral_object();
  const auto& g = a.group();
  Subgroup f = Subgroup::generated(a.group_ptr(), {g.find_element("r").value()});
  auto basis = invariant_basis(a, f);
  for (const auto& v : basis)
    for (const auto& w : basis) {
      AlgebraElement p = a.multiply(v, w);
      for (int x : f.elements()) CHECK(a.act(x, p) == p);
    }
}

TEST_CASE("canonical class rewriting") {
  GaloisObject a = dihedral_object();
  const auto& g = a.group();
  // For any g in G and s in S, (g, s) rewrites with g = g_i t to the class
  // (i, t s t^-1), which is a valid basis element whose coset contains g.
  for (int x = 0; x < g.order(); ++x)
    for (int s : a.s().elements()) {
      InducedBasisElement b = canonicalize_class(a, x, s);
      CHECK(a.valid_basis(b));
      CHECK(a.cosets().coset_of(x) == b.coset);
      // When g is already a representative the class is (coset, s) itself.
      if (x == a.cosets().rep(b.coset)) CHECK(b.s == s);
    }
}
