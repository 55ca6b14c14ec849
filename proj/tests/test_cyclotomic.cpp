#include <doctest.h>

#include <random>
#include <vector>

#include "galdef/cyclotomic.hpp"

using namespace galdef;

namespace {
using Poly = std::vector<int64_t>;
}

TEST_CASE("cyclotomic polynomials, ascending coefficients") {
  CHECK(cyclotomic_polynomial(1) == Poly{-1, 1});
  CHECK(cyclotomic_polynomial(2) == Poly{1, 1});
  CHECK(cyclotomic_polynomial(3) == Poly{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == Poly{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == Poly{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == Poly{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(5) == Poly{1, 1, 1, 1, 1});
  for (int m : {1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 20})
    CHECK(static_cast<int>(cyclotomic_polynomial(m).size()) == euler_phi(m) + 1);
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(4) == 2);
  CHECK(euler_phi(5) == 4);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(20) == 8);
}

TEST_CASE("roots of unity: order, negation, vanishing sums") {
  CHECK(CycInt::root(4, 2) == -CycInt::integer(4, 1));  // zeta_4^2 = -1
  CHECK(CycInt::root(6, 3) == -CycInt::integer(6, 1));
  for (int m : {1, 2, 3, 4, 5, 6, 8, 12}) {
    CycInt p = CycInt::integer(m, 1);
    for (int k = 0; k < m; ++k) p = p * CycInt::root(m, 1);
    CHECK(p.is_integer(1));  // zeta_m^m = 1
    CHECK(CycInt::root(m, m) == CycInt::integer(m, 1));
  }
  // 1 + zeta_p + ... + zeta_p^(p-1) = 0 reduces exactly to the zero vector.
  for (int p : {2, 3, 5, 7, 11, 13}) {
    CycInt sum = CycInt::zero(p);
    for (int k = 0; k < p; ++k) sum += CycInt::root(p, k);
    CHECK(sum.is_zero());
  }
  // A non-vanishing subsum stays nonzero.
  CHECK(!(CycInt::root(5, 1) + CycInt::root(5, 2)).is_zero());
}

TEST_CASE("exponent arithmetic matches root multiplication") {
  for (int m : {3, 4, 6, 12})
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        CHECK(CycInt::root(m, a) * CycInt::root(m, b) == CycInt::root(m, (a + b) % m));
}

TEST_CASE("lifting is a ring homomorphism and faithful") {
  // zeta_3 -> zeta_12^4, zeta_4 -> zeta_12^3.
  CHECK(CycInt::root(3, 1).lifted(12) == CycInt::root(12, 4));
  CHECK(CycInt::root(4, 1).lifted(12) == CycInt::root(12, 3));
  CHECK(CycInt::integer(2, 7).lifted(4) == CycInt::integer(4, 7));

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> exp(0, 5), coef(-3, 3);
  auto random_elem = [&](int m) {
    CycInt v = CycInt::zero(m);
    for (int t = 0; t < 4; ++t)
      v += CycInt::integer(m, coef(rng)) * CycInt::root(m, exp(rng));
    return v;
  };
  for (int t = 0; t < 50; ++t) {
    CycInt a = random_elem(6), b = random_elem(6);
    CHECK((a + b).lifted(12) == a.lifted(12) + b.lifted(12));
    CHECK((a * b).lifted(12) == a.lifted(12) * b.lifted(12));
  }
  // Distinct values stay distinct after lifting (injectivity spot check).
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      CHECK(CycInt::root(6, a).lifted(12) != CycInt::root(6, b).lifted(12));
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> exp(0, 11), coef(-4, 4);
  auto random_elem = [&]() {
    CycInt v = CycInt::zero(12);
    for (int t = 0; t < 5; ++t)
      v += CycInt::integer(12, coef(rng)) * CycInt::root(12, exp(rng));
    return v;
  };
  for (int t = 0; t < 100; ++t) {
    CycInt a = random_elem(), b = random_elem(), c = random_elem();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == CycInt::zero(12));
    CHECK(a * CycInt::integer(12, 1) == a);
    CHECK(a * CycInt::zero(12) == CycInt::zero(12));
  }
}

TEST_CASE("rendering") {
  CHECK(CycInt::zero(4).to_string() == "0");
  CHECK(CycInt::integer(4, 5).to_string() == "5");
  CHECK(root_to_string(4, 0) == "1");
  CHECK(root_to_string(4, 1) == "z4");
  CHECK(root_to_string(4, 3) == "z4^3");
}
