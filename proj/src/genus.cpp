#include "lcalc/genus.hpp"

#include <algorithm>
#include <stdexcept>

#include "lcalc/errors.hpp"

namespace lcalc {

// ---------------------------------------------------------------------------
// univariate series

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw Error("power series needs at least one coefficient");
}

PowerSeries PowerSeries::variable(std::size_t order) {
  PowerSeries t(order);
  if (order >= 1) t[1] = 1;
  return t;
}

PowerSeries PowerSeries::constant(const Rational& a, std::size_t order) {
  PowerSeries s(order);
  s[0] = a;
  return s;
}

PowerSeries PowerSeries::truncate(std::size_t order) const {
  if (order > this->order()) throw Error("cannot raise the truncation order of a series");
  return PowerSeries(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<long>(order) + 1));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries s(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= s.order(); ++i) s[i] = a[i] + b[i];
  return s;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + Rational(-1) * b; }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries s(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= s.order(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= s.order(); ++j) s[i + j] += a[i] * b[j];
  }
  return s;
}

PowerSeries operator*(const Rational& s, const PowerSeries& a) {
  PowerSeries out = a;
  for (auto& c : out.c_) c *= s;
  return out;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
  if (inner[0] != 0) throw Error("compose: inner series must have zero constant term");
  const std::size_t n = std::min(order(), inner.order());
  const PowerSeries g = inner.truncate(n);
  PowerSeries out = constant(c_[n], n);
  for (std::size_t i = n; i-- > 0;) {
    out = out * g;
    out[0] += c_[i];
  }
  return out;
}

PowerSeries PowerSeries::inverse() const {
  if (c_[0] == 0) throw Error("inverse: constant term is zero");
  PowerSeries b(order());
  b[0] = 1 / c_[0];
  for (std::size_t n = 1; n <= order(); ++n) {
    Rational s = 0;
    for (std::size_t i = 1; i <= n; ++i) s += c_[i] * b[n - i];
    b[n] = -s / c_[0];
  }
  return b;
}

PowerSeries PowerSeries::shift_down(std::size_t k) const {
  if (k > order()) throw Error("shift_down past the truncation order");
  for (std::size_t i = 0; i < k; ++i)
    if (c_[i] != 0) throw Error("shift_down: series is not divisible by t^k");
  return PowerSeries(std::vector<Rational>(c_.begin() + static_cast<long>(k), c_.end()));
}

PowerSeries series_reverse(const PowerSeries& f) {
  if (f.order() < 1) throw Error("series_reverse needs order at least 1");
  if (f[0] != 0) throw Error("series_reverse: constant term must vanish");
  if (f[1] == 0) throw Error("series_reverse: linear coefficient is zero");
  PowerSeries g(f.order());
  g[1] = 1 / f[1];
  for (std::size_t n = 2; n <= f.order(); ++n) {
    const PowerSeries e = f.compose(g);
    g[n] -= e[n] / f[1];
  }
  return g;
}

// ---------------------------------------------------------------------------
// bivariate series

BivariateSeries::BivariateSeries(std::size_t order) : order_(order), c_(order + 1) {
  for (std::size_t i = 0; i <= order; ++i) c_[i].resize(order + 1 - i);
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries s(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= s.order(); ++i)
    for (std::size_t j = 0; i + j <= s.order(); ++j) s.at(i, j) = a.at(i, j) + b.at(i, j);
  return s;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  BivariateSeries s(n);
  std::vector<std::pair<std::size_t, std::size_t>> support;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; i + j <= n; ++j)
      if (b.at(i, j) != 0) support.emplace_back(i, j);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (a.at(i, j) == 0) continue;
      for (const auto& [k, l] : support)
        if (i + j + k + l <= n) s.at(i + k, j + l) += a.at(i, j) * b.at(k, l);
    }
  return s;
}

// ---------------------------------------------------------------------------
// Bernoulli numbers and genera

std::vector<Rational> bernoulli_numbers(unsigned kmax) {
  std::vector<Rational> b(kmax + 1);
  b[0] = 1;
  for (unsigned n = 1; n <= kmax; ++n) {
    Rational s = 0;
    Integer binom = 1;  // C(n+1, j)
    for (unsigned j = 0; j < n; ++j) {
      s += binom * b[j];
      binom = binom * (n + 1 - j) / (j + 1);
    }
    b[n] = -s / (n + 1);
  }
  return b;
}

Rational bernoulli(unsigned k) { return bernoulli_numbers(k)[k]; }

GenusValues genus_trivial(std::size_t n) {
  GenusValues g{"trivial", std::vector<Rational>(n + 1)};
  g.a[0] = 1;
  return g;
}

GenusValues genus_las(std::size_t n) {
  GenusValues g{"las", std::vector<Rational>(n + 1)};
  Rational quarter_power = 1;
  for (std::size_t m = 0; 2 * m <= n; ++m) {
    g.a[2 * m] = quarter_power;
    quarter_power /= 4;
  }
  return g;
}

GenusValues genus_signature(std::size_t n) {
  GenusValues g{"signature", std::vector<Rational>(n + 1)};
  for (std::size_t m = 0; 2 * m <= n; ++m) g.a[2 * m] = 1;
  return g;
}

std::optional<GenusValues> genus_by_name(const std::string& name, std::size_t n) {
  if (name == "las") return genus_las(n);
  if (name == "signature") return genus_signature(n);
  if (name == "trivial") return genus_trivial(n);
  return std::nullopt;
}

PowerSeries log_from_genus(const GenusValues& g, std::size_t order) {
  PowerSeries s(order);
  for (std::size_t n = 0; n + 1 <= order; ++n) s[n + 1] = g.value(n) / Rational(n + 1);
  if (order >= 1) s[1] = 1;
  return s;
}

PowerSeries characteristic_series(const GenusValues& g, std::size_t order) {
  const PowerSeries e = series_reverse(log_from_genus(g, order + 1));
  return e.shift_down(1).inverse();
}

// ---------------------------------------------------------------------------
// the b-sequence and its 2-adic behaviour

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::optional<long> v2(const Rational& q) {
  if (q == 0) return std::nullopt;
  const Integer num = abs(q.get_num());
  const Integer den = q.get_den();
  return static_cast<long>(mpz_scan1(num.get_mpz_t(), 0)) - static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
}

namespace {

Integer pow2(unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

}  // namespace

std::vector<Rational> ahr_b_sequence(unsigned kmax) {
  const auto bern = bernoulli_numbers(kmax);
  std::vector<Rational> b(kmax + 1);
  for (unsigned k = 2; k <= kmax; ++k) {
    b[k] = Rational(pow2(k + 1) * (pow2(k - 1) - 1), Integer(2 * k)) * bern[k];
    b[k].canonicalize();
  }
  for (unsigned k = 3; k <= kmax; k += 2)
    if (b[k] != 0) throw std::logic_error("odd entry of the b-sequence is nonzero");
  return b;
}

TwoAdicReport two_adic_obstruction(const Integer& c, unsigned kmax) {
  if (mpz_even_p(c.get_mpz_t())) throw Error("two_adic_obstruction: c must be odd");
  if (abs(c) <= 1) throw Error("two_adic_obstruction: |c| must exceed 1");
  const auto b = ahr_b_sequence(2 * kmax);
  TwoAdicReport rep;
  rep.all_nonzero = true;
  rep.strictly_increasing = true;
  for (unsigned k = 1; k <= kmax; ++k) {
    Integer cpow;
    mpz_pow_ui(cpow.get_mpz_t(), c.get_mpz_t(), 2 * k);
    TwoAdicRow row;
    row.k = k;
    row.term = Rational(1 - pow2(2 * k - 1)) * Rational(1 - cpow) * b[2 * k];
    row.valuation = v2(row.term);
    if (!row.nonzero()) rep.all_nonzero = false;
    if (!rep.rows.empty()) {
      const auto& prev = rep.rows.back().valuation;
      if (!prev || !row.valuation || *row.valuation <= *prev) rep.strictly_increasing = false;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::vector<CongruenceRow> congruence_check(unsigned kmax, const std::vector<Rational>& b_even) {
  const auto bern = bernoulli_numbers(2 * kmax);
  std::vector<CongruenceRow> rows;
  for (unsigned k = 1; k <= kmax; ++k) {
    CongruenceRow r;
    r.k = k;
    const Rational bk = k < b_even.size() ? b_even[k] : Rational(0);
    r.residue = bk + bern[2 * k] / Rational(2 * k);
    r.integral = is_integer(r.residue);
    rows.push_back(r);
  }
  return rows;
}

std::vector<CongruenceRow> congruence_check(unsigned kmax) {
  const auto b = ahr_b_sequence(2 * kmax);
  std::vector<Rational> even(kmax + 1);
  for (unsigned k = 1; k <= kmax; ++k) even[k] = b[2 * k];
  return congruence_check(kmax, even);
}

// ---------------------------------------------------------------------------
// formal group laws

BivariateSeries fgl_multiplicative(const Integer& a, std::size_t order) {
  BivariateSeries f(order);
  if (order >= 1) {
    f.at(1, 0) = 1;
    f.at(0, 1) = 1;
  }
  if (order >= 2) f.at(1, 1) = a;
  return f;
}

BivariateSeries compose(const PowerSeries& f, const BivariateSeries& fxy) {
  if (fxy.at(0, 0) != 0) throw Error("compose: inner law must have zero constant term");
  const std::size_t n = std::min(f.order(), fxy.order());
  BivariateSeries out(n);
  out.at(0, 0) = f[0];
  BivariateSeries power = BivariateSeries(n) + fxy;  // truncated to n
  for (std::size_t m = 1; m <= n; ++m) {
    if (f[m] != 0)
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j) out.at(i, j) += f[m] * power.at(i, j);
    if (m < n) power = power * fxy;
  }
  return out;
}

BivariateSeries apply_multiplicative(const Integer& a, const PowerSeries& f) {
  const std::size_t n = f.order();
  BivariateSeries out(n);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; i + j <= n; ++j) {
      Rational v = 0;
      if (j == 0) v += f[i];
      if (i == 0) v += f[j];
      if (i >= 1 && j >= 1) v += a * f[i] * f[j];
      out.at(i, j) = v;
    }
  return out;
}

FglIsoResult fgl_isomorphism(unsigned k, std::size_t order) {
  if (k < 1) throw Error("fgl_isomorphism: k must be at least 1");
  if (order < 1) throw Error("fgl_isomorphism: order must be at least 1");
  const Integer a = pow2(k);
  const BivariateSeries f2 = fgl_multiplicative(2, order);
  std::vector<BivariateSeries> powers{BivariateSeries(order), f2};
  for (std::size_t m = 2; m <= order; ++m) powers.push_back(powers.back() * f2);

  FglIsoResult res;
  res.f = PowerSeries(order);
  res.f[1] = 1;
  res.solved = true;
  auto lhs = [&](std::size_t i, std::size_t j, std::size_t upto) {
    Rational s = 0;
    for (std::size_t m = 1; m <= upto; ++m) s += res.f[m] * powers[m].at(i, j);
    return s;
  };
  auto rhs = [&](std::size_t i, std::size_t j) {
    Rational v = 0;
    if (j == 0) v += res.f[i];
    if (i == 0) v += res.f[j];
    if (i >= 1 && j >= 1) v += a * res.f[i] * res.f[j];
    return v;
  };
  for (std::size_t n = 2; n <= order; ++n) {
    // the x^{n-1} y coefficient is n f_n plus terms of lower f
    res.f[n] = (rhs(n - 1, 1) - lhs(n - 1, 1, n - 1)) / Rational(n);
    for (std::size_t i = 0; i <= n; ++i)
      if (lhs(i, n - i, n) != rhs(i, n - i)) {
        res.solved = false;
        res.failed_degree = n;
        return res;
      }
  }
  if (!(compose(res.f, f2) == apply_multiplicative(a, res.f))) {
    res.solved = false;
    res.failed_degree = order;
  }
  res.integral = std::all_of(res.f.coefficients().begin(), res.f.coefficients().end(), is_integer);
  return res;
}

}  // namespace lcalc
