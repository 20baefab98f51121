#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lcalc/matrix.hpp"

namespace lcalc {

/// Truncated power series Σ_{i ≤ N} c_i t^i over Q, known modulo t^{N+1}.
class PowerSeries {
 public:
  PowerSeries() = default;
  /// The zero series with truncation order N.
  explicit PowerSeries(std::size_t order) : c_(order + 1) {}
  /// Order is coeffs.size() - 1; coeffs must be non-empty.
  explicit PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries variable(std::size_t order);
  static PowerSeries constant(const Rational& a, std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return c_.at(i); }
  Rational& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<Rational>& coefficients() const { return c_; }

  PowerSeries truncate(std::size_t order) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& s, const PowerSeries& a);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  /// this(inner(t)); inner must have zero constant term.
  PowerSeries compose(const PowerSeries& inner) const;
  /// 1 / this; needs an invertible constant term.
  PowerSeries inverse() const;
  /// Divides by t^k; the first k coefficients must vanish. Order drops by k.
  PowerSeries shift_down(std::size_t k) const;

 private:
  std::vector<Rational> c_;
};

/// g with f(g(t)) = t modulo t^{N+1}; f(0) = 0 and f'(0) != 0 required.
PowerSeries series_reverse(const PowerSeries& f);

/// Series in x, y truncated at total degree N.
class BivariateSeries {
 public:
  explicit BivariateSeries(std::size_t order);

  std::size_t order() const { return order_; }
  const Rational& at(std::size_t i, std::size_t j) const { return c_.at(i).at(j); }
  Rational& at(std::size_t i, std::size_t j) { return c_.at(i).at(j); }

  friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  std::size_t order_;
  std::vector<std::vector<Rational>> c_;  // c_[i][j], i + j <= order
};

Rational bernoulli(unsigned k);
/// B_0 .. B_kmax with B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(unsigned kmax);

/// Normalized values a_n = Φ(CP^n); a_0 = 1.
struct GenusValues {
  std::string name;
  std::vector<Rational> a;
  Rational value(std::size_t n) const { return n < a.size() ? a[n] : Rational(0); }
};

GenusValues genus_trivial(std::size_t n);
/// a_{2m} = 2^{-2m}, odd values zero.
GenusValues genus_las(std::size_t n);
/// a_{2m} = 1, odd values zero.
GenusValues genus_signature(std::size_t n);
/// "las", "signature", "trivial"
std::optional<GenusValues> genus_by_name(const std::string& name, std::size_t n);

/// Σ a_n t^{n+1}/(n+1) to order N.
PowerSeries log_from_genus(const GenusValues& g, std::size_t order);
/// t / exp(t) to order N, exp being the reverse of the logarithm.
PowerSeries characteristic_series(const GenusValues& g, std::size_t order);

/// 2-adic valuation; nullopt for zero.
std::optional<long> v2(const Rational& q);

/// b_k = 2^{k+1}(2^{k-1} - 1)/(2k) B_k, indexed by k; entries below 2 are zero.
std::vector<Rational> ahr_b_sequence(unsigned kmax);

struct TwoAdicRow {
  unsigned k = 0;
  Rational term;
  std::optional<long> valuation;
  bool nonzero() const { return term != 0; }
};

struct TwoAdicReport {
  std::vector<TwoAdicRow> rows;
  bool strictly_increasing = false;
  bool all_nonzero = false;
  /// Terms tend to zero 2-adically while staying nonzero.
  bool obstructed() const { return strictly_increasing && all_nonzero; }
};

/// (1 - 2^{2k-1})(1 - c^{2k}) b_{2k} for k = 1..kmax; c odd with |c| > 1.
TwoAdicReport two_adic_obstruction(const Integer& c, unsigned kmax);

struct CongruenceRow {
  unsigned k = 0;
  Rational residue;  // b_{2k} + B_{2k}/(2k)
  bool integral = false;
};

/// Uses the b-sequence above.
std::vector<CongruenceRow> congruence_check(unsigned kmax);
/// Uses b_even[k] as b_{2k} (missing entries count as zero).
std::vector<CongruenceRow> congruence_check(unsigned kmax, const std::vector<Rational>& b_even);

/// x + y + a x y
BivariateSeries fgl_multiplicative(const Integer& a, std::size_t order);

struct FglIsoResult {
  PowerSeries f;
  bool solved = false;       // every degree matched exactly
  std::size_t failed_degree = 0;
  bool integral = false;
};

/// f with f(0) = 0, f'(0) = 1 and f(F_2(x, y)) = F_{2^k}(f(x), f(y)) to total degree N.
FglIsoResult fgl_isomorphism(unsigned k, std::size_t order);

/// f(F(x, y)) as a bivariate series.
BivariateSeries compose(const PowerSeries& f, const BivariateSeries& fxy);
/// F(f(x), f(y)) for F = x + y + a x y.
BivariateSeries apply_multiplicative(const Integer& a, const PowerSeries& f);

bool is_integer(const Rational& q);

}  // namespace lcalc
