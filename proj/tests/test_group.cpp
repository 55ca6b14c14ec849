#include <doctest.h>

#include <algorithm>
#include <set>

#include "galdef/errors.hpp"
#include "galdef/group.hpp"

using namespace galdef;

TEST_CASE("cycle labels and parsing round-trip") {
  CHECK(cycle_label({0, 1, 2}) == "()");
  CHECK(cycle_label({1, 0, 2}) == "(01)");
  CHECK(cycle_label({1, 2, 0}) == "(012)");
  CHECK(cycle_label({1, 0, 3, 2}) == "(01)(23)");

  CHECK(parse_cycles(3, "(01)") == std::vector<int>{1, 0, 2});
  CHECK(parse_cycles(3, "(0 1)") == std::vector<int>{1, 0, 2});
  CHECK(parse_cycles(3, "(0,1)") == std::vector<int>{1, 0, 2});
  CHECK(parse_cycles(3, "()") == std::vector<int>{0, 1, 2});
  CHECK(parse_cycles(3, "e") == std::vector<int>{0, 1, 2});
  // Rightmost cycle applies first: (01)(12) maps 1 -> 0 first, then 0 -> 1.
  CHECK(parse_cycles(3, "(01)(12)") == parse_cycles(3, "(021)"));

  CHECK_THROWS_AS(parse_cycles(3, "(03)"), ParseError);
  CHECK_THROWS_AS(parse_cycles(3, "(00)"), ParseError);
  CHECK_THROWS_AS(parse_cycles(3, "(01"), ParseError);

  // Degrees above 10 switch to comma-separated points.
  std::vector<int> big(12);
  for (int i = 0; i < 12; ++i) big[i] = i;
  std::swap(big[10], big[11]);
  CHECK(cycle_label(big) == "(10,11)");
  CHECK(parse_cycles(12, "(10,11)") == big);
}

TEST_CASE("generated groups close in deterministic order") {
  auto s3 = FiniteGroup::from_generators(3, {parse_cycles(3, "(01)"), parse_cycles(3, "(012)")});
  REQUIRE(s3->order() == 6);
  // BFS from the identity: e, then images by each generator in turn.
  CHECK(s3->label(0) == "()");
  CHECK(s3->label(1) == "(01)");
  CHECK(s3->label(2) == "(012)");
  CHECK(s3->label(3) == "(12)");
  CHECK(s3->label(4) == "(02)");
  CHECK(s3->label(5) == "(021)");

  auto z2 = FiniteGroup::from_generators(2, {parse_cycles(2, "(01)")});
  CHECK(z2->order() == 2);
  auto v4 = FiniteGroup::from_generators(4, {parse_cycles(4, "(01)"), parse_cycles(4, "(23)")});
  CHECK(v4->order() == 4);

  CHECK_THROWS_AS(FiniteGroup::from_generators(
                      8, {parse_cycles(8, "(01234567)"), parse_cycles(8, "(01)")}, "", 100),
                  SizeLimitError);
}

TEST_CASE("constructors satisfy the group axioms") {
  for (const auto& g :
       {FiniteGroup::cyclic(6), FiniteGroup::dihedral(4), FiniteGroup::symmetric(4),
        FiniteGroup::alternating(4),
        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::symmetric(3))}) {
    CHECK(verify_group_axioms(*g));
    CHECK(g->mul(0, 0) == 0);
    for (int a = 0; a < g->order(); ++a) CHECK(g->mul(a, g->inv(a)) == 0);
  }
  CHECK(FiniteGroup::symmetric(4)->order() == 24);
  CHECK(FiniteGroup::alternating(5)->order() == 60);
}

TEST_CASE("element orders, conjugation and labels") {
  auto d4 = FiniteGroup::dihedral(4);
  REQUIRE(d4->order() == 8);
  CHECK(d4->label(0) == "e");
  CHECK(d4->label(1) == "r");
  CHECK(d4->label(2) == "r^2");
  CHECK(d4->label(4) == "f");
  CHECK(d4->label(5) == "rf");
  CHECK(d4->element_order(1) == 4);
  CHECK(d4->element_order(4) == 2);
  CHECK(d4->find_element("r^3") == 3);
  CHECK(d4->find_element("#6") == 6);
  CHECK(!d4->find_element("q"));
  // f r f^-1 = r^-1 in a dihedral group.
  CHECK(d4->conj(4, 1) == d4->inv(1));

  auto s4 = FiniteGroup::symmetric(4);
  CHECK(s4->find_element("(0 1)(2 3)") == s4->find_element("(01)(23)"));
  CHECK(s4->find_element("(1,2)") == s4->find_element("(12)"));
}

TEST_CASE("direct and semidirect products") {
  auto z2 = FiniteGroup::cyclic(2);
  auto z3 = FiniteGroup::cyclic(3);
  auto z6 = FiniteGroup::direct_product(z3, z2);
  CHECK(z6->order() == 6);
  CHECK(z6->label(1) == "(e,g)");
  CHECK(z6->label(2) == "(g,e)");
  CHECK(z6->find_element("(g^2,g)") == 5);
  CHECK(z6->element_order(*z6->find_element("(g,g)")) == 6);

  // Z3 x| Z2 inverting: the action row for the nontrivial element of Z2.
  std::vector<std::vector<int>> invert = {{0, 1, 2}, {0, 2, 1}};
  auto s3 = FiniteGroup::semidirect_product(z3, z2, invert);
  CHECK(s3->order() == 6);
  CHECK(verify_group_axioms(*s3));
  // (g, e)(e, g) has order 2 in the dihedral presentation.
  int a = s3->mul(*s3->find_element("(g,e)"), *s3->find_element("(e,g)"));
  CHECK(s3->element_order(a) == 2);

  // A non-automorphism row is rejected.
  std::vector<std::vector<int>> bad = {{0, 1, 2}, {0, 0, 1}};
  CHECK_THROWS_AS(FiniteGroup::semidirect_product(z3, z2, bad), HypothesisError);
  // A non-homomorphism assignment (inverting for the identity of H) too.
  std::vector<std::vector<int>> bad2 = {{0, 2, 1}, {0, 1, 2}};
  CHECK_THROWS_AS(FiniteGroup::semidirect_product(z3, z2, bad2), HypothesisError);

  CHECK_THROWS_AS(FiniteGroup::direct_product(FiniteGroup::cyclic(50), FiniteGroup::cyclic(50)),
                  SizeLimitError);
}

TEST_CASE("from_table validates the axioms") {
  std::vector<std::vector<int>> z2t = {{0, 1}, {1, 0}};
  auto z2 = FiniteGroup::from_table(z2t, {"e", "x"}, "z2");
  CHECK(z2->order() == 2);

  std::vector<std::vector<int>> not_assoc = {
      {0, 1, 2}, {1, 0, 0}, {2, 0, 0}};  // rows not even latin
  CHECK_THROWS(FiniteGroup::from_table(not_assoc, {"e", "a", "b"}, "bad"));
}

TEST_CASE("conjugacy classes") {
  auto s3 = FiniteGroup::symmetric(3);
  auto cls = conjugacy_classes(*s3);
  REQUIRE(cls.size() == 3);
  CHECK(cls[0].size() == 1);
  CHECK(cls[1].size() == 3);
  CHECK(cls[2].size() == 2);
  // Classes are listed by least member, which each class begins with.
  CHECK(cls[0][0] == 0);

  auto d4 = FiniteGroup::dihedral(4);
  auto dcls = conjugacy_classes(*d4);
  std::multiset<size_t> sizes;
  for (const auto& c : dcls) sizes.insert(c.size());
  CHECK(sizes == std::multiset<size_t>{1, 1, 2, 2, 2});
}

TEST_CASE("subgroups: construction, normality, cosets") {
  auto s3 = FiniteGroup::symmetric(3);
  Subgroup a3 = Subgroup::generated(s3, {*s3->find_element("(012)")});
  CHECK(a3.order() == 3);
  CHECK(a3.is_normal());
  Subgroup t = Subgroup::generated(s3, {*s3->find_element("(01)")});
  CHECK(t.order() == 2);
  CHECK(!t.is_normal());
  CHECK(t.subset_of(Subgroup::whole(s3)));
  CHECK(!a3.subset_of(t));
  CHECK(t.conjugated_by(*s3->find_element("(012)")).order() == 2);
  CHECK(t.conjugated_by(*s3->find_element("(012)")) != t);
  CHECK(a3.intersect(t).order() == 1);

  // Not closed under the product: rejected.
  CHECK_THROWS(Subgroup(s3, {0, 1, 2}));

  CosetDecomposition cosets(t);
  REQUIRE(cosets.count() == 3);
  CHECK(cosets.rep(0) == 0);
  for (int g = 0; g < s3->order(); ++g) {
    auto [i, inner] = cosets.decompose(g);
    CHECK(s3->mul(cosets.rep(i), inner) == g);
    CHECK(t.contains(inner));
    // The representative is the least element of its coset.
    CHECK(cosets.rep(i) <= g);
  }

  auto gens = Subgroup::whole(s3).small_generating_set();
  CHECK(Subgroup::generated(s3, gens).order() == 6);
  CHECK(gens.size() <= 2);
}

TEST_CASE("centralizers and centers") {
  auto d4 = FiniteGroup::dihedral(4);
  CHECK(center(d4).elements() == std::vector<int>{0, 2});
  Subgroup whole = Subgroup::whole(d4);
  CHECK(centralizer(whole, 1).order() == 4);   // C(r) = <r>
  CHECK(centralizer(whole, 4).order() == 4);   // C(f) = {e, r^2, f, r^2f}
  CHECK(center(FiniteGroup::symmetric(3)).order() == 1);
  CHECK(center(FiniteGroup::cyclic(5)).order() == 5);
}

namespace {

int count_subgroups(const GroupPtr& g) { return static_cast<int>(all_subgroups(g).size()); }

// Independent route to the normal subgroup lattice: filter the full subgroup
// lattice by normality.
std::vector<Subgroup> normals_by_filter(const GroupPtr& g) {
  std::vector<Subgroup> out;
  for (const auto& h : all_subgroups(g))
    if (h.is_normal()) out.push_back(h);
  return out;
}

}  // namespace

TEST_CASE("subgroup lattice sizes") {
  CHECK(count_subgroups(FiniteGroup::symmetric(3)) == 6);
  CHECK(count_subgroups(FiniteGroup::dihedral(4)) == 10);
  CHECK(count_subgroups(FiniteGroup::alternating(4)) == 10);
  CHECK(count_subgroups(FiniteGroup::symmetric(4)) == 30);
  CHECK(count_subgroups(FiniteGroup::cyclic(6)) == 4);
  CHECK(count_subgroups(FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                                    FiniteGroup::cyclic(2))) == 5);
  CHECK(count_subgroups(FiniteGroup::direct_product(FiniteGroup::cyclic(3),
                                                    FiniteGroup::cyclic(3))) == 6);
}

TEST_CASE("normal subgroup enumeration agrees with the filtered lattice") {
  for (const auto& g : {FiniteGroup::symmetric(3), FiniteGroup::dihedral(4),
                        FiniteGroup::alternating(4), FiniteGroup::symmetric(4)}) {
    auto fast = normal_subgroups(g);
    auto slow = normals_by_filter(g);
    REQUIRE(fast.size() == slow.size());
    for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
  }
}

TEST_CASE("normal subgroups of S3 x D5") {
  auto g = FiniteGroup::direct_product(FiniteGroup::symmetric(3), FiniteGroup::dihedral(5));
  auto normals = normal_subgroups(g);
  REQUIRE(normals.size() == 10);
  std::multiset<int> orders;
  for (const auto& n : normals) orders.insert(n.order());
  // 9 products of {1, A3, S3} x {1, C5, D5} plus the index-2 diagonal.
  CHECK(orders == std::multiset<int>{1, 3, 5, 6, 10, 15, 30, 30, 30, 60});
}
