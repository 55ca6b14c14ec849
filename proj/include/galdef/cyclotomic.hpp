#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace galdef {

// Exact arithmetic in Z[zeta_m], the ring of integers extended by a primitive
// m-th root of unity. Values are integer coordinate vectors in the power
// basis 1, z, ..., z^(phi(m)-1) reduced modulo the m-th cyclotomic polynomial,
// so equality of values is equality of coordinates. No floating point
// anywhere; vanishing sums of roots of unity reduce to the zero vector.

// Coefficients of Phi_m, ascending degree, monic. Computed by exact division
// of x^m - 1 by the product of Phi_d over proper divisors d | m; results are
// cached (thread-safe).
std::vector<int64_t> cyclotomic_polynomial(int m);

int euler_phi(int m);

class CycInt {
 public:
  CycInt() : CycInt(zero(1)) {}

  static CycInt zero(int modulus);
  static CycInt integer(int modulus, int64_t value);
  static CycInt root(int modulus, int64_t exponent);  // zeta_m^exponent

  int modulus() const { return modulus_; }
  const std::vector<int64_t>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_integer(int64_t value) const;

  // Image under zeta_m -> zeta_m2^(m2/m); requires m | m2. An injective ring
  // homomorphism, so comparisons after lifting are faithful.
  CycInt lifted(int modulus2) const;

  CycInt operator-() const;
  friend CycInt operator+(const CycInt& a, const CycInt& b);
  friend CycInt operator-(const CycInt& a, const CycInt& b);
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  CycInt& operator+=(const CycInt& b) { return *this = *this + b; }
  CycInt& operator*=(const CycInt& b) { return *this = *this * b; }

  friend bool operator==(const CycInt& a, const CycInt& b) {
    return a.modulus_ == b.modulus_ && a.c_ == b.c_;
  }
  friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

  // Polynomial rendering in z{m}, descending powers; "0" when zero.
  std::string to_string() const;

 private:
  CycInt(int modulus, std::vector<int64_t> coeffs);

  int modulus_;
  std::vector<int64_t> c_;  // size phi(m), canonical
};

// Rendering for a bare root of unity exponent: "1", "z4", "z4^3".
std::string root_to_string(int modulus, int64_t exponent);

}  // namespace galdef
