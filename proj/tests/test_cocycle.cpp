#include <doctest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "galdef/cocycle.hpp"
#include "galdef/errors.hpp"
#include "galdef/group.hpp"

using namespace galdef;

namespace {

GroupPtr klein() { return FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)); }

// The raw bilinear pairing table on Z2 x Z2 before inverse normalization:
// alpha(u^i1 v^j1, u^i2 v^j2) = zeta_2^(j1 * i2) with u = element 1 and
// v = element 2 (the deterministic generator choice).
TwoCocycle raw_klein_bilinear(const GroupPtr& g) {
  Subgroup s = Subgroup::whole(g);
  auto iso = default_bilinear_iso(s, 2);
  TwoCocycle a;
  a.s = s;
  a.modulus = 2;
  a.table.assign(16, 0);
  std::vector<std::pair<int, int>> coords(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) coords[static_cast<size_t>(iso[i * 2 + j])] = {i, j};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      a.table[static_cast<size_t>(x) * 4 + y] = (coords[x].second * coords[y].first) % 2;
  a.inverse_normalized = false;
  return a;
}

const std::vector<int> kKleinBetaTable = {
    0, 0, 0, 0,  //
    0, 0, 3, 1,  //
    0, 1, 0, 3,  //
    0, 3, 1, 0,  //
};

}  // namespace

TEST_CASE("standard nondegenerate cocycle on the Klein four-group") {
  auto g = klein();
  Subgroup s = Subgroup::whole(g);
  TwoCocycle beta = standard_nondegenerate(2, s, default_bilinear_iso(s, 2));

  // q = 2 forces the modulus up to 4 so involutions can absorb a square root.
  CHECK(beta.modulus == 4);
  CHECK(beta.inverse_normalized);
  CHECK(beta.table == kKleinBetaTable);
  CHECK(validate(beta).ok);
  CHECK(is_nondegenerate(beta));
  CHECK(alpha_regular_elements(beta) == std::vector<int>{0});
  for (int x : s.elements()) CHECK(beta.exp_at(x, g->inv(x)) == 0);
}

TEST_CASE("inverse-pair normalization is an explicit coboundary shift") {
  auto g = klein();
  TwoCocycle raw = raw_klein_bilinear(g);
  CHECK(validate(raw).ok);  // already a genuine cocycle, just not inverse-normalized
  CHECK(raw.exp_at(3, 3) == 1);

  auto [beta, phi] = normalize_inverse_pairs(raw);
  CHECK(beta.modulus == 4);
  CHECK(phi.modulus == 4);
  CHECK(beta.table == kKleinBetaTable);
  // Only the "double" generator product needs a correction phase, and it is
  // the primitive 4th root: phi = (1, 1, 1, zeta_4).
  CHECK(phi.exps == std::vector<int>{0, 0, 0, 1});

  TwoCocycle rebuilt = multiply_by_coboundary(raw, phi);
  CHECK(rebuilt.modulus == 4);
  CHECK(rebuilt.table == beta.table);

  // Normalizing an already-normalized cocycle is a fixed point.
  auto [again, phi2] = normalize_inverse_pairs(beta);
  CHECK(again.modulus == 4);
  CHECK(again.table == beta.table);
  CHECK(std::all_of(phi2.exps.begin(), phi2.exps.end(), [](int e) { return e == 0; }));
}

TEST_CASE("odd modulus needs no doubling") {
  auto g = FiniteGroup::direct_product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(3));
  Subgroup s = Subgroup::whole(g);
  TwoCocycle beta = standard_nondegenerate(3, s, default_bilinear_iso(s, 3));
  CHECK(beta.modulus == 3);
  CHECK(beta.inverse_normalized);
  CHECK(validate(beta).ok);
  CHECK(is_nondegenerate(beta));
  for (int x : s.elements()) CHECK(beta.exp_at(x, g->inv(x)) == 0);
}

TEST_CASE("validation reports what is wrong") {
  auto g = klein();
  Subgroup s = Subgroup::whole(g);
  TwoCocycle beta = standard_nondegenerate(2, s, default_bilinear_iso(s, 2));

  SUBCASE("broken cocycle identity") {
    TwoCocycle bad = beta;
    bad.table[1 * 4 + 2] = 0;  // was 3
    auto d = validate(bad);
    CHECK(!d.ok);
    CHECK(!d.violations.empty());
    CHECK(d.message == "cocycle identity fails on " + std::to_string(d.violations.size()) +
                           " triple(s)");
    for (const auto& v : d.violations) {
      CHECK(v.r >= 0);
      CHECK(v.s >= 0);
      CHECK(v.t >= 0);
      long long lhs = bad.exp_at(v.r, v.s) + bad.exp_at(g->mul(v.r, v.s), v.t);
      long long rhs = bad.exp_at(v.s, v.t) + bad.exp_at(v.r, g->mul(v.s, v.t));
      CHECK(lhs % 4 != rhs % 4);
    }
  }

  SUBCASE("non-normalized row or column") {
    TwoCocycle bad = beta;
    bad.table[0 * 4 + 1] = 2;  // alpha(1, a) != 1
    auto d = validate(bad);
    CHECK(!d.ok);
    REQUIRE(!d.violations.empty());
    CHECK(d.violations[0].r == -1);
    CHECK(d.violations[0].s == 1);
    CHECK(d.violations[0].t == -1);
  }

  SUBCASE("shape and range errors") {
    TwoCocycle bad = beta;
    bad.table.pop_back();
    CHECK(!validate(bad).ok);

    TwoCocycle bad2 = beta;
    bad2.table[5] = 4;  // out of [0, modulus)
    CHECK(!validate(bad2).ok);

    TwoCocycle bad3 = beta;
    bad3.modulus = 0;
    CHECK(!validate(bad3).ok);
  }

  SUBCASE("false inverse-normalization claim is caught") {
    TwoCocycle raw = raw_klein_bilinear(g);
    raw.inverse_normalized = true;  // lie: alpha(c, c) = zeta_2
    auto d = validate(raw);
    CHECK(!d.ok);
    CHECK(d.message.find("inverse") != std::string::npos);
  }
}

TEST_CASE("trivial cocycle is maximally degenerate") {
  auto g = klein();
  TwoCocycle a = trivial_cocycle(Subgroup::whole(g));
  CHECK(validate(a).ok);
  CHECK(a.inverse_normalized);
  CHECK(alpha_regular_elements(a) == std::vector<int>{0, 1, 2, 3});
  CHECK(!is_nondegenerate(a));
}

TEST_CASE("lifting scales exponents and rejects bad targets") {
  auto g = klein();
  TwoCocycle raw = raw_klein_bilinear(g);
  TwoCocycle up = lift_cocycle(raw, 4);
  CHECK(up.modulus == 4);
  for (size_t i = 0; i < raw.table.size(); ++i) CHECK(up.table[i] == 2 * raw.table[i]);
  CHECK(validate(up).ok);
  CHECK_THROWS_AS(lift_cocycle(raw, 3), std::invalid_argument);

  OneCochain phi{raw.s, 2, {0, 1, 0, 1}};
  OneCochain phi_up = lift_cochain(phi, 6);
  CHECK(phi_up.modulus == 6);
  CHECK(phi_up.exps == std::vector<int>{0, 3, 0, 3});
  CHECK_THROWS_AS(lift_cochain(phi, 5), std::invalid_argument);
}

TEST_CASE("coboundary multiplication input checks") {
  auto g = klein();
  TwoCocycle beta = standard_nondegenerate(2, Subgroup::whole(g), {0, 2, 1, 3});
  OneCochain short_phi{beta.s, 4, {0, 1}};
  CHECK_THROWS_AS(multiply_by_coboundary(beta, short_phi), std::invalid_argument);
  OneCochain bad_id{beta.s, 4, {1, 0, 0, 0}};
  CHECK_THROWS_AS(multiply_by_coboundary(beta, bad_id), std::invalid_argument);
}

TEST_CASE("twisted conjugation on basis elements") {
  auto g = klein();
  Subgroup s = Subgroup::whole(g);
  TwoCocycle beta = standard_nondegenerate(2, s, default_bilinear_iso(s, 2));

  // x_a x_b x_a^-1 = zeta_4^2 x_b = -x_b: the commutation phase of the pairing.
  auto [c_ab, target_ab] = twisted_conjugation(beta, 1, 2);
  CHECK(c_ab == 2);
  CHECK(target_ab == 2);
  auto [c_ba, target_ba] = twisted_conjugation(beta, 2, 1);
  CHECK(c_ba == 2);
  CHECK(target_ba == 1);

  // Every basis element commutes with itself on the nose.
  for (int x : s.elements()) {
    auto [c, target] = twisted_conjugation(beta, x, x);
    CHECK(c == 0);
    CHECK(target == x);
  }

  TwoCocycle raw = raw_klein_bilinear(g);
  CHECK_THROWS_AS(twisted_conjugation(raw, 1, 2), HypothesisError);
}

TEST_CASE("F-regular elements of the Klein cocycle") {
  auto g = klein();
  Subgroup s = Subgroup::whole(g);
  TwoCocycle beta = standard_nondegenerate(2, s, default_bilinear_iso(s, 2));
  Subgroup f = Subgroup::generated(g, {1});

  CHECK(alpha_f_regular(beta, f, 0, 0));
  CHECK(alpha_f_regular(beta, f, 0, 1));
  CHECK(!alpha_f_regular(beta, f, 0, 2));
  CHECK(!alpha_f_regular(beta, f, 0, 3));

  // Against the whole group only the identity survives (non-degeneracy).
  Subgroup whole = Subgroup::whole(g);
  for (int x : s.elements())
    CHECK(alpha_f_regular(beta, whole, 0, x) == (x == 0));
}

TEST_CASE("conjugating the cocycle datum inside a dihedral group") {
  auto g = FiniteGroup::dihedral(4);
  int r = g->find_element("r").value();
  int r2 = g->find_element("r^2").value();
  int f = g->find_element("f").value();
  int r2f = g->find_element("r^2f").value();
  Subgroup s = Subgroup::generated(g, {r2, f});
  REQUIRE(s.elements() == std::vector<int>{0, r2, f, r2f});

  TwoCocycle beta = standard_nondegenerate(2, s, default_bilinear_iso(s, 2));
  auto [s2, beta2] = conjugate_pair(r, beta);

  // r normalizes this Klein subgroup (r f r^-1 = r^2 f), so the support is
  // unchanged but the table is transported.
  CHECK(s2.elements() == s.elements());
  CHECK(beta2.modulus == beta.modulus);
  CHECK(beta2.inverse_normalized == beta.inverse_normalized);
  CHECK(validate(beta2).ok);
  CHECK(is_nondegenerate(beta2));
  for (int x : s.elements())
    for (int y : s.elements())
      CHECK(beta2.exp_at(g->conj(r, x), g->conj(r, y)) == beta.exp_at(x, y));
  // The swap u <-> uv actually changes the table.
  CHECK(beta2.table != beta.table);
}

TEST_CASE("deterministic isomorphism construction and rejection") {
  auto g = klein();
  Subgroup s = Subgroup::whole(g);
  auto iso = default_bilinear_iso(s, 2);
  CHECK(iso == std::vector<int>{0, 2, 1, 3});  // e, v, u, uv with u = 1, v = 2

  auto c4 = FiniteGroup::cyclic(4);
  CHECK_THROWS_AS(default_bilinear_iso(Subgroup::whole(c4), 2), HypothesisError);
  CHECK_THROWS_AS(default_bilinear_iso(s, 3), HypothesisError);

  // A non-isomorphism layout is rejected by the constructor.
  CHECK_THROWS_AS(standard_nondegenerate(2, s, {0, 1, 2, 2}), HypothesisError);
  // Swapping the generator roles is still an isomorphism and still works.
  TwoCocycle other = standard_nondegenerate(2, s, {0, 1, 2, 3});
  CHECK(validate(other).ok);
  CHECK(is_nondegenerate(other));
}
