#include "galdef/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace galdef {

namespace {

using Poly = std::vector<int64_t>;  // ascending degree, no trailing zeros except [0]

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Exact division by a monic divisor; throws if a remainder appears.
Poly poly_div_exact(Poly num, const Poly& den) {
  if (den.back() != 1) throw std::logic_error("divisor must be monic");
  if (num.size() < den.size()) throw std::logic_error("inexact polynomial division");
  Poly q(num.size() - den.size() + 1, 0);
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    int64_t c = num[i + den.size() - 1];
    q[i] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (int64_t c : num)
    if (c != 0) throw std::logic_error("inexact polynomial division");
  trim(q);
  return q;
}

// Remainder modulo a monic divisor.
Poly poly_mod(Poly num, const Poly& den) {
  const size_t d = den.size() - 1;
  while (num.size() > d) {
    int64_t c = num.back();
    size_t shift = num.size() - den.size();
    if (c != 0)
      for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    num.pop_back();
  }
  num.resize(d, 0);
  return num;
}

}  // namespace

std::vector<int64_t> cyclotomic_polynomial(int m) {
  if (m <= 0) throw std::invalid_argument("cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<int, Poly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed bottom-up so the
  // recursion is resolved within the cache.
  std::vector<int> pending{m};
  while (!pending.empty()) {
    int k = pending.back();
    if (cache.count(k)) {
      pending.pop_back();
      continue;
    }
    bool ready = true;
    for (int d = 1; d < k; ++d)
      if (k % d == 0 && !cache.count(d)) {
        pending.push_back(d);
        ready = false;
      }
    if (!ready) continue;
    pending.pop_back();
    Poly num(k + 1, 0);
    num[0] = -1;
    num[k] = 1;
    Poly den{1};
    for (int d = 1; d < k; ++d)
      if (k % d == 0) den = poly_mul(den, cache.at(d));
    cache[k] = poly_div_exact(std::move(num), den);
  }
  return cache.at(m);
}

int euler_phi(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

CycInt::CycInt(int modulus, std::vector<int64_t> coeffs)
    : modulus_(modulus), c_(std::move(coeffs)) {}

CycInt CycInt::zero(int modulus) {
  auto phi = cyclotomic_polynomial(modulus);
  return CycInt(modulus, std::vector<int64_t>(phi.size() - 1, 0));
}

CycInt CycInt::integer(int modulus, int64_t value) {
  CycInt z = zero(modulus);
  z.c_[0] = value;
  return z;
}

CycInt CycInt::root(int modulus, int64_t exponent) {
  auto phi = cyclotomic_polynomial(modulus);
  int64_t e = ((exponent % modulus) + modulus) % modulus;
  Poly p(static_cast<size_t>(e) + 1, 0);
  p[static_cast<size_t>(e)] = 1;
  p = poly_mod(std::move(p), phi);
  return CycInt(modulus, std::move(p));
}

bool CycInt::is_zero() const {
  for (int64_t v : c_)
    if (v != 0) return false;
  return true;
}

bool CycInt::is_integer(int64_t value) const {
  if (c_[0] != value) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

CycInt CycInt::lifted(int modulus2) const {
  if (modulus2 % modulus_ != 0)
    throw std::invalid_argument("modulus lift requires m | m2");
  if (modulus2 == modulus_) return *this;
  const int k = modulus2 / modulus_;
  auto phi2 = cyclotomic_polynomial(modulus2);
  Poly p((c_.size() - 1) * static_cast<size_t>(k) + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) p[i * k] = c_[i];
  p = poly_mod(std::move(p), phi2);
  return CycInt(modulus2, std::move(p));
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

CycInt operator+(const CycInt& a, const CycInt& b) {
  if (a.modulus_ != b.modulus_)
    throw std::invalid_argument("CycInt modulus mismatch in +");
  CycInt r = a;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

CycInt operator-(const CycInt& a, const CycInt& b) { return a + (-b); }

CycInt operator*(const CycInt& a, const CycInt& b) {
  if (a.modulus_ != b.modulus_)
    throw std::invalid_argument("CycInt modulus mismatch in *");
  auto phi = cyclotomic_polynomial(a.modulus_);
  std::vector<int64_t> prod(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
  }
  prod = poly_mod(std::move(prod), phi);
  return CycInt(a.modulus_, std::move(prod));
}

std::string CycInt::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    int64_t v = c_[i];
    if (v == 0) continue;
    if (first) {
      if (v < 0) out << '-';
      first = false;
    } else {
      out << (v < 0 ? " - " : " + ");
    }
    int64_t av = v < 0 ? -v : v;
    if (i == 0) {
      out << av;
    } else {
      if (av != 1) out << av << '*';
      out << 'z' << modulus_;
      if (i > 1) out << '^' << i;
    }
  }
  if (first) return "0";
  return out.str();
}

std::string root_to_string(int modulus, int64_t exponent) {
  int64_t e = ((exponent % modulus) + modulus) % modulus;
  if (e == 0) return "1";
  std::ostringstream out;
  out << 'z' << modulus;
  if (e != 1) out << '^' << e;
  return out.str();
}

}  // namespace galdef
