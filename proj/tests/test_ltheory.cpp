#include <doctest.h>

#include "lcalc/ltheory.hpp"
#include "oracle/fixtures.hpp"

using namespace lcalc;
using fixtures::Z;
using fixtures::Zn;

namespace {

std::array<FGAbGroup, 4> table(const GradedKOModule& m) { return l_groups(m).groups; }
const FGAbGroup O;

}  // namespace

TEST_CASE("l_groups recipe") {
  const auto ko = fixtures::ko();
  CHECK(table(ko) == std::array<FGAbGroup, 4>{Z(), O, O, O});
  CHECK(table(shift(ko, 4)) == std::array<FGAbGroup, 4>{Z(), O, Zn(2), O});
  CHECK(table(shift(ko, 6)) == std::array<FGAbGroup, 4>{Zn(2), O, Z(), Zn(2)});
  CHECK(table(shift(ko, 7)) == std::array<FGAbGroup, 4>{Zn(2), O, O, Z()});
  CHECK(table(GradedKOModule::zero()) == std::array<FGAbGroup, 4>{O, O, O, O});
  CHECK(table(fixtures::ku_as_real()) == std::array<FGAbGroup, 4>{Z(), O, Z(), O});

  auto bad = ko;
  bad.x[4] = fixtures::m1(Z(), Z(), 2);
  CHECK_THROWS_AS(l_groups(bad), RelationError);
}

TEST_CASE("alternative description of L_1 and L_2") {
  auto [l1, l2] = alt_l12(fixtures::reals());
  CHECK(l1.is_trivial());
  CHECK(l2.is_trivial());
  std::tie(l1, l2) = alt_l12(fixtures::complexes());
  CHECK(l1.is_trivial());
  CHECK(l2 == Z());
  for (int n = 0; n < 8; ++n) {
    const auto d = shift(fixtures::reals(), n);
    const auto l = l_groups(d.real);
    std::tie(l1, l2) = alt_l12(d);
    CHECK(l1 == l[1]);
    CHECK(l2 == l[2]);
  }
  const auto o3 = fixtures::cuntz3_complex();
  std::tie(l1, l2) = alt_l12(o3);
  CHECK(l1 == l_groups(o3.real)[1]);
  CHECK(l2 == l_groups(o3.real)[2]);
}

TEST_CASE("tau on ko") {
  const auto ko = fixtures::ko();
  CHECK(tau_map(ko, 0).matrix() == IntMatrix{{1}});
  CHECK(tau_map(ko, 4).matrix() == IntMatrix{{8}});
  CHECK(tau_map(ko, 8).matrix() == IntMatrix{{16}});
  CHECK(tau_map(ko, 12).matrix() == IntMatrix{{128}});
  CHECK(tau_map(ko, 16).matrix() == IntMatrix{{256}});
  CHECK(tau_map(ko, 1) == l_groups(ko).l1_projection);
  CHECK(tau_map(ko, 2).is_zero());
  CHECK_THROWS_AS(tau_map(ko, -1), Error);
  // complex case: multiplication by 2^k on π_{2k}
  const auto c = fixtures::ku_as_real();
  for (int k = 0; k < 6; ++k) CHECK(tau_map(c, 2 * k).matrix() == IntMatrix{{1L << k}});
}

namespace {

void check_tau_multiplicative(const ProductDatum& pd, int max_degree) {
  for (int m = 0; m <= max_degree; ++m)
    for (int n = 0; n <= max_degree; ++n)
      for (std::size_t s = 0; s < pd.a.group(m).num_generators(); ++s)
        for (std::size_t t = 0; t < pd.b.group(n).num_generators(); ++t) {
          const auto ea = GroupElement::generator(pd.a.group(m), s);
          const auto eb = GroupElement::generator(pd.b.group(n), t);
          const auto lhs = l_product(tau_map(pd.a, m)(ea), m, tau_map(pd.b, n)(eb), n, pd);
          const auto rhs = tau_map(pd.ab, m + n)(pd.multiply(m, n, ea, eb));
          INFO("degrees " << m << ", " << n);
          CHECK(lhs.value == rhs);
        }
}

}  // namespace

TEST_CASE("pairings validate") {
  CHECK(validate_pairing(fixtures::ko_pairing()).valid());
  CHECK(validate_pairing(fixtures::quaternion_pairing()).valid());
  CHECK(validate_pairing(fixtures::complex_pairing()).valid());

  auto broken = fixtures::ko_pairing();
  broken.pairing[{1, 1}] = {{IntVector{0}}};
  const auto r = validate_pairing(broken);
  REQUIRE_FALSE(r.valid());
  CHECK(r.violations.front().relation == "η-linearity");

  auto ill = fixtures::ko_pairing();
  ill.pairing[{1, 0}] = {{IntVector{}}};
  CHECK(validate_pairing(ill).violations.front().relation == "shape");
}

TEST_CASE("tau is multiplicative") {
  check_tau_multiplicative(fixtures::ko_pairing(), 8);
  check_tau_multiplicative(fixtures::complex_pairing(), 8);
}

TEST_CASE("products") {
  const auto pd = fixtures::ko_pairing();
  const auto one = GroupElement(Z(), {1});
  const auto p = l_product(one, 0, one, 0, pd);
  CHECK(p.value == one);
  CHECK(p.slot == 0);
  const auto zero2 = GroupElement::zero(l_groups(pd.a)[2]);
  CHECK(l_product(zero2, 2, zero2, 2, pd).value.is_zero());

  // L_2(ℍ) = Z/2 times itself through the (2,2) cell
  const auto hp = fixtures::quaternion_pairing();
  const auto lh = l_groups(hp.a);
  REQUIRE(lh[2] == Zn(2));
  const auto g = GroupElement::generator(lh[2], 0);
  const auto prod = l_product(g, 2, g, 2, hp);
  const auto target = hp.ab.x_at(4)(hp.multiply(6, 6, lh.lift(2, g), lh.lift(2, g)));
  const auto halves = all_halves(target);
  REQUIRE(halves.size() == 1);
  CHECK(prod.value == halves.front());
  CHECK(prod.slot == 0);

  // L_2(ℂ) = Z: the generator squares to (1, -1) in L_0(ℂ × ℂ) = Z^2
  const auto cp = fixtures::complex_pairing();
  const auto lc = l_groups(cp.a);
  const auto b = GroupElement::generator(lc[2], 0);
  const auto cc = l_product(b, 2, b, 2, cp);
  CHECK((cc.value == GroupElement(FGAbGroup::free(2), {1, -1}) || cc.value == GroupElement(FGAbGroup::free(2), {-1, 1})));
  CHECK_FALSE(cc.by_analogy);

  // a zero pairing on Z/2-data leaves two halves
  const auto o3 = fixtures::cuntz3_complex().real;
  const auto zp = fixtures::build_pairing(o3, o3, o3, [&](int p, int q, std::size_t, std::size_t) {
    return IntVector(o3.group(p + q).num_generators(), Integer(0));
  });
  const auto lo = l_groups(o3);
  const auto e = GroupElement::generator(lo[2], 0);
  try {
    l_product(e, 2, e, 2, zp);
    FAIL("expected ambiguity");
  } catch (const RelationError& err) {
    CHECK(err.relation() == "halving ambiguous");
  }
}

TEST_CASE("products need pairing data") {
  auto pd = fixtures::ko_pairing();
  pd.pairing.erase({0, 0});
  const auto one = GroupElement(Z(), {1});
  CHECK_THROWS_AS(l_product(one, 0, one, 0, pd), MissingDataError);
}

TEST_CASE("boundary maps to Tate cohomology") {
  const auto ko = fixtures::ko();
  CHECK(boundary_to_tate(ko, 0).matrix() == IntMatrix{{1}});
  CHECK(boundary_to_tate(ko, 0).target() == Zn(2));
  CHECK(boundary_to_tate(ko, 1).is_zero());
  CHECK(boundary_to_tate(ko, 5).is_zero());
  const auto s7 = shift(ko, 7);
  CHECK_FALSE(boundary_to_tate(s7, 3).is_zero());
  CHECK_THROWS_AS(boundary_to_tate(ko, 2), MissingDataError);

  const auto r = fixtures::reals();
  CHECK(boundary_to_tate(ko, 2, &r).source().is_trivial());
  const auto h = fixtures::quaternions();
  const auto bh = boundary_to_tate(h.real, 2, &h);
  CHECK(bh.source() == Zn(2));
  CHECK(bh.matrix() == IntMatrix{{1}});
  const auto c = fixtures::complexes();
  const auto bc = boundary_to_tate(c.real, 2, &c);
  CHECK(bc.matrix() == IntMatrix{{1}});
}

TEST_CASE("free L-groups") {
  const auto ko = fixtures::ko();
  auto f = free_l_groups(ko);
  CHECK(f.c.group == Z());
  CHECK(f.l1h.is_trivial());
  CHECK(f.l3h.is_trivial());
  REQUIRE(f.l2h);
  CHECK(f.l2h->is_trivial());

  const auto o3 = fixtures::cuntz3_complex();
  f = free_l_groups(o3.real, &o3);
  CHECK(f.c.group == Zn(2));
  CHECK(f.l1h.is_trivial());
  CHECK(f.l3h.is_trivial());
  REQUIRE(f.l2h);
  CHECK(*f.l2h == Zn(2));
  CHECK(f.l2h_constraint.sub->is_trivial());

  f = free_l_groups(o3.real);
  CHECK_FALSE(f.l2h.has_value());
  CHECK_FALSE(f.l2h_constraint.sub.has_value());

  auto zero_unit = shift(ko, 7);
  zero_unit.unit = GroupElement::zero(zero_unit.group(0));
  f = free_l_groups(zero_unit);
  CHECK(f.c.group.is_trivial());
  CHECK(f.l1h == zero_unit.group(1));
  CHECK(f.l3h == kernel(zero_unit.eta_at(7)).group);
  REQUIRE(f.l2h);
  CHECK(*f.l2h == cokernel(zero_unit.eta_at(1)).group);

  CHECK_THROWS_AS(free_l_groups(shift(ko, 3)), MissingDataError);
}
