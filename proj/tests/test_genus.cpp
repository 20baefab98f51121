#include <doctest.h>

#include <random>

#include "lcalc/errors.hpp"
#include "lcalc/genus.hpp"
#include "oracle/series.hpp"

using namespace lcalc;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

PowerSeries from(const std::vector<Rational>& v) { return PowerSeries(v); }

}  // namespace

TEST_CASE("bernoulli") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == q(-1, 2));
  CHECK(bernoulli(2) == q(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == q(-1, 30));
  const auto ours = bernoulli_numbers(40);
  const auto ref = oracle::bernoulli_at(40);
  for (unsigned k = 2; k <= 40; ++k) CHECK(ours[k] == ref[k]);
}

TEST_CASE("series arithmetic") {
  const auto t = PowerSeries::variable(6);
  const auto one_minus_t = PowerSeries::constant(1, 6) - t;
  const auto geo = one_minus_t.inverse();
  for (std::size_t i = 0; i <= 6; ++i) CHECK(geo[i] == 1);
  CHECK((geo * one_minus_t) == PowerSeries::constant(1, 6));
  CHECK((t * t).shift_down(2) == PowerSeries::constant(1, 4));
  CHECK_THROWS_AS(t.shift_down(2), Error);
  CHECK_THROWS_AS(PowerSeries::variable(3).inverse(), Error);
  // orders never silently grow
  CHECK((PowerSeries::variable(3) + PowerSeries::variable(7)).order() == 3);
  CHECK((PowerSeries::variable(3) * PowerSeries::variable(7)).order() == 3);
  CHECK_THROWS_AS(PowerSeries::variable(3).truncate(4), Error);
}

TEST_CASE("series_reverse") {
  CHECK(series_reverse(PowerSeries::variable(8)) == PowerSeries::variable(8));
  CHECK_THROWS_AS(series_reverse(PowerSeries::constant(0, 4)), Error);

  const std::size_t n = 12;
  const auto t_plus_t2 = PowerSeries::variable(n) + PowerSeries::variable(n) * PowerSeries::variable(n);
  CHECK(t_plus_t2.compose(series_reverse(t_plus_t2)) == PowerSeries::variable(n));

  CHECK(series_reverse(log_from_genus(genus_las(20), 20)) == from(oracle::two_tanh_half(20)));

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    PowerSeries f(10);
    f[1] = d(rng) % 2 == 0 ? 1 : -1;
    for (std::size_t i = 2; i <= 10; ++i) {
      f[i] = Rational(d(rng), 1 + std::abs(d(rng)));
      f[i].canonicalize();
    }
    const auto g = series_reverse(f);
    CHECK(f.compose(g) == PowerSeries::variable(10));
    CHECK(g.compose(f) == PowerSeries::variable(10));
  }
}

TEST_CASE("log_from_genus") {
  CHECK(log_from_genus(genus_trivial(10), 10) == PowerSeries::variable(10));
  const auto sig = log_from_genus(genus_signature(15), 15);
  for (std::size_t i = 0; i <= 15; ++i) CHECK(sig[i] == (i % 2 ? Rational(1, i) : Rational(0)));
  const auto las = log_from_genus(genus_las(15), 15);
  for (std::size_t i = 1; i <= 15; i += 2) CHECK(las[i] == Rational(1, i) / Rational(oracle::pow_int(2, i - 1)));
}

TEST_CASE("characteristic_series") {
  CHECK(characteristic_series(genus_trivial(8), 8) == PowerSeries::constant(1, 8));
  const auto las = characteristic_series(genus_las(21), 20);
  CHECK(las[2] == q(1, 12));
  CHECK(las[4] == q(-1, 720));
  CHECK(las == from(oracle::u_coth_u(q(1, 2), 20)));
  CHECK(characteristic_series(genus_signature(21), 20) == from(oracle::u_coth_u(1, 20)));
  REQUIRE(genus_by_name("las", 3));
  CHECK_FALSE(genus_by_name("todd", 3));
}

TEST_CASE("b-sequence") {
  const auto b = ahr_b_sequence(30);
  CHECK(b[2] == q(1, 3));
  CHECK(b[3] == 0);
  CHECK(b[4] == q(-14, 15));
  for (unsigned k = 3; k <= 30; k += 2) CHECK(b[k] == 0);
}

TEST_CASE("two_adic_obstruction") {
  CHECK(v2(q(12, 5)) == 2);
  CHECK(v2(q(3, 8)) == -3);
  CHECK_FALSE(v2(0).has_value());

  const auto r = two_adic_obstruction(3, 30);
  CHECK(r.obstructed());
  REQUIRE(r.rows.size() == 30);
  CHECK(r.rows[0].term == Rational(1 - 2) * Rational(1 - 9) * q(1, 3));
  for (const auto& row : r.rows) {
    CHECK(row.nonzero());
    CHECK(*row.valuation == oracle::lte_prediction(3, row.k));
  }
  CHECK(*r.rows.back().valuation > 60);

  const auto neg = two_adic_obstruction(-3, 30);
  for (std::size_t i = 0; i < 30; ++i) CHECK(neg.rows[i].valuation == r.rows[i].valuation);
  for (long c : {5L, 7L, 9L, -11L}) {
    const auto rc = two_adic_obstruction(c, 12);
    for (const auto& row : rc.rows) CHECK(*row.valuation == oracle::lte_prediction(c, row.k));
  }
  CHECK_THROWS_AS(two_adic_obstruction(4, 3), Error);
  CHECK_THROWS_AS(two_adic_obstruction(1, 3), Error);
}

TEST_CASE("congruence_check") {
  const auto rows = congruence_check(2);
  CHECK(rows[0].residue == q(5, 12));
  CHECK(rows[1].residue == q(-113, 120));
  CHECK_FALSE(rows[0].integral);
  const auto zero = congruence_check(5, {});
  const auto bern = oracle::bernoulli_at(10);
  for (const auto& row : zero) CHECK(row.residue == bern[2 * row.k] / Rational(2 * row.k));
}

TEST_CASE("fgl") {
  const auto add = fgl_multiplicative(0, 4);
  CHECK(add.at(1, 0) == 1);
  CHECK(add.at(1, 1) == 0);
  CHECK(fgl_multiplicative(16, 4).at(1, 1) == 16);

  const auto id = fgl_isomorphism(1, 16);
  CHECK(id.solved);
  CHECK(id.f == PowerSeries::variable(16));

  const auto k2 = fgl_isomorphism(2, 8);
  CHECK(k2.solved);
  CHECK(k2.integral);
  CHECK(k2.f == PowerSeries::variable(8) + PowerSeries::variable(8) * PowerSeries::variable(8));

  for (unsigned k = 2; k <= 6; ++k) {
    const auto r = fgl_isomorphism(k, 32);
    CHECK(r.solved);
    CHECK(r.integral);
    CHECK(r.f == from(oracle::fgl_closed_form(k, 32)));
    CHECK(compose(r.f, fgl_multiplicative(2, 32)) == apply_multiplicative(oracle::pow_int(2, k), r.f));
  }
  CHECK_THROWS_AS(fgl_isomorphism(0, 4), Error);
}
