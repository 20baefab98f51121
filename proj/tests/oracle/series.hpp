#pragma once

// Reference values for series tests, built without the genus module.

#include <vector>

#include "lcalc/matrix.hpp"

namespace oracle {

using lcalc::Integer;
using lcalc::Rational;

// Akiyama–Tanigawa; gives B_1 = +1/2, even entries agree with every convention.
inline std::vector<Rational> bernoulli_at(unsigned kmax) {
  std::vector<Rational> out(kmax + 1), a(kmax + 1);
  for (unsigned m = 0; m <= kmax; ++m) {
    a[m] = Rational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
    out[m] = a[0];
  }
  return out;
}

inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer binomial(const Integer& n, unsigned k) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline Integer pow_int(long base, unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

// coefficients of u/tanh(u) at u = s t, i.e. Σ 2^{2k} B_{2k} s^{2k} t^{2k} / (2k)!
inline std::vector<Rational> u_coth_u(const Rational& s, unsigned order) {
  const auto b = bernoulli_at(order);
  std::vector<Rational> c(order + 1);
  Rational sp = 1;
  for (unsigned n = 0; n <= order; ++n) {
    if (n % 2 == 0) c[n] = Rational(pow_int(2, n)) * b[n] * sp / Rational(factorial(n));
    sp *= s;
  }
  return c;
}

// 2 tanh(t/2)
inline std::vector<Rational> two_tanh_half(unsigned order) {
  const auto b = bernoulli_at(order + 1);
  std::vector<Rational> c(order + 1);
  for (unsigned k = 1; 2 * k - 1 <= order; ++k)
    c[2 * k - 1] = Rational(4 * (pow_int(2, 2 * k) - 1)) * b[2 * k] / Rational(factorial(2 * k));
  return c;
}

// ((1 + 2t)^{2^{k-1}} - 1) / 2^k
inline std::vector<Rational> fgl_closed_form(unsigned k, unsigned order) {
  std::vector<Rational> c(order + 1);
  const Integer e = pow_int(2, k - 1);
  for (unsigned j = 1; j <= order; ++j) {
    c[j] = Rational(binomial(e, j) * pow_int(2, j), pow_int(2, k));
    c[j].canonicalize();
  }
  return c;
}

inline long v2_int(Integer n) {
  n = abs(n);
  return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
}

// v_2((1 - 2^{2k-1})(1 - c^{2k}) b_{2k}) from lifting the exponent and von Staudt–Clausen:
// v_2(c^{2k} - 1) = v_2(c^2 - 1) + v_2(k), v_2(b_{2k}) = 2k - 2 - v_2(k).
inline long lte_prediction(long c, unsigned k) {
  return v2_int(Integer(c) * c - 1) + 2 * static_cast<long>(k) - 2;
}

}  // namespace oracle
