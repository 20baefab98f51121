#pragma once

// Hand-entered K-data used as references for the data files and the engine.

#include <functional>

#include "lcalc/ltheory.hpp"

namespace fixtures {

using namespace lcalc;

inline FGAbGroup Z() { return FGAbGroup::free(1); }
inline FGAbGroup Zn(long n) { return FGAbGroup::cyclic(n); }
inline AbHom m1(const FGAbGroup& s, const FGAbGroup& t, long v) { return AbHom(s, t, IntMatrix{{v}}); }

inline GradedKOModule ko() {
  auto m = GradedKOModule::with_zero_maps("ko", {Z(), Zn(2), Zn(2), {}, Z(), {}, {}, {}});
  m.eta[0] = m1(Z(), Zn(2), 1);
  m.eta[1] = m1(Zn(2), Zn(2), 1);
  m.x[0] = m1(Z(), Z(), 1);
  m.x[4] = m1(Z(), Z(), 4);
  m.unit = GroupElement(Z(), {1});
  return m;
}

inline ComplexificationData reals() {
  ComplexificationData d;
  d.real = ko();
  d.complex = {"ku", {Z(), {}}};
  for (int n = 0; n < 8; ++n) {
    d.c[n] = AbHom::zero(d.real.group(n), d.complex.group(n));
    d.u[n] = AbHom::zero(d.complex.group(n), d.real.group(n));
  }
  d.c[0] = m1(Z(), Z(), 1);
  d.c[2] = m1(Zn(2), Z(), 0);
  d.c[4] = m1(Z(), Z(), 2);
  d.u[0] = m1(Z(), Z(), 2);
  d.u[2] = m1(Z(), Zn(2), 1);
  d.u[4] = m1(Z(), Z(), 1);
  return d;
}

inline GradedKOModule ku_as_real() {
  auto m = GradedKOModule::with_zero_maps("ℂ", {Z(), {}, Z(), {}, Z(), {}, Z(), {}});
  for (int n = 0; n < 8; n += 2) m.x[n] = m1(Z(), Z(), 2);
  m.unit = GroupElement(Z(), {1});
  return m;
}

inline ComplexificationData complexes() {
  ComplexificationData d;
  d.real = ku_as_real();
  d.complex = {"ℂ×ℂ", {FGAbGroup::free(2), {}}};
  for (int n = 0; n < 8; ++n) {
    d.c[n] = AbHom::zero(d.real.group(n), d.complex.group(n));
    d.u[n] = AbHom::zero(d.complex.group(n), d.real.group(n));
  }
  for (int n = 0; n < 8; n += 2) {
    const long sign = (n / 2) % 2 ? -1 : 1;
    d.c[n] = AbHom(Z(), FGAbGroup::free(2), IntMatrix{{1}, {sign}});
    d.u[n] = AbHom(FGAbGroup::free(2), Z(), IntMatrix{{1, sign}});
  }
  return d;
}

inline ComplexificationData quaternions() {
  auto d = shift(reals(), 4);
  d.real.name = "ℍ";
  d.real.unit = GroupElement(Z(), {1});
  return d;
}

// O_3 viewed as a real algebra: Z/2 in even degrees, trivial η and x.
inline ComplexificationData cuntz3_complex() {
  ComplexificationData d;
  d.real = GradedKOModule::with_zero_maps("O3", {Zn(2), {}, Zn(2), {}, Zn(2), {}, Zn(2), {}});
  d.real.unit = GroupElement(Zn(2), {1});
  const FGAbGroup two(IntVector{2, 2});
  d.complex = {"O3 × O3", {two, {}}};
  for (int n = 0; n < 8; ++n) {
    d.c[n] = AbHom::zero(d.real.group(n), d.complex.group(n));
    d.u[n] = AbHom::zero(d.complex.group(n), d.real.group(n));
  }
  for (int n = 0; n < 8; n += 2) {
    d.c[n] = AbHom(Zn(2), two, IntMatrix{{1}, {1}});
    d.u[n] = AbHom(two, Zn(2), IntMatrix{{1, 1}});
  }
  return d;
}

using PairLaw = std::function<IntVector(int p, int q, std::size_t s, std::size_t t)>;

inline ProductDatum build_pairing(const GradedKOModule& a, const GradedKOModule& b, const GradedKOModule& ab,
                                  const PairLaw& law) {
  ProductDatum pd{a, b, ab, {}};
  for (int p = 0; p < 8; ++p)
    for (int q = 0; q < 8; ++q) {
      std::vector<std::vector<IntVector>> table(a.group(p).num_generators());
      for (std::size_t s = 0; s < table.size(); ++s)
        for (std::size_t t = 0; t < b.group(q).num_generators(); ++t) table[s].push_back(law(p, q, s, t));
      pd.pairing[{p, q}] = table;
    }
  return pd;
}

// Products of the standard generators 1, η, η², x of ko.
inline long ko_coefficient(int p, int q) {
  if (p == 0 || q == 0) return 1;
  if (p == 1 && q == 1) return 1;
  if (p == 4 && q == 4) return 4;
  return 0;
}

inline ProductDatum ko_pairing() {
  const auto m = ko();
  return build_pairing(m, m, m, [&](int p, int q, std::size_t, std::size_t) {
    return m.group(p + q).is_trivial() ? IntVector{} : IntVector{ko_coefficient(p, q)};
  });
}

// ℍ ⊗ ℍ ≅ M_4(ℝ): K(ℍ) is ko moved up four degrees.
inline ProductDatum quaternion_pairing() {
  const auto h = quaternions().real;
  const auto m = ko();
  return build_pairing(h, h, m, [&](int p, int q, std::size_t, std::size_t) {
    return m.group(p + q).is_trivial() ? IntVector{} : IntVector{ko_coefficient(wrap(p - 4, 8), wrap(q - 4, 8))};
  });
}

// ℂ ⊗ ℂ ≅ ℂ × ℂ with β ⊗ 1 -> (β, β) and 1 ⊗ β -> (β, -β).
inline GradedKOModule complex_pair_module() {
  const FGAbGroup z2 = FGAbGroup::free(2);
  auto m = GradedKOModule::with_zero_maps("ℂ×ℂ", {z2, {}, z2, {}, z2, {}, z2, {}});
  for (int n = 0; n < 8; n += 2) m.x[n] = AbHom(z2, z2, IntMatrix{{2, 0}, {0, 2}});
  m.unit = GroupElement(z2, {1, 1});
  return m;
}

inline ProductDatum complex_pairing() {
  const auto c = ku_as_real();
  return build_pairing(c, c, complex_pair_module(), [&](int p, int q, std::size_t, std::size_t) {
    if (p % 2 || q % 2) return IntVector{};
    return IntVector{1, (q / 2) % 2 ? -1 : 1};
  });
}

}  // namespace fixtures
