#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lcalc/abelian.hpp"

namespace lcalc {

/// Residue of n modulo m in [0, m).
constexpr int wrap(int n, int m) { return ((n % m) + m) % m; }

/// 8-periodic graded module over π*(ko). Degree n is stored at n mod 8; the
/// periodicity element is implicit in the indexing.
struct GradedKOModule {
  std::string name;
  std::array<FGAbGroup, 8> groups;
  std::array<AbHom, 8> eta;  // K_n -> K_{n+1}
  std::array<AbHom, 8> x;    // K_n -> K_{n+4}
  std::optional<GroupElement> unit;  // class in K_0

  /// Groups as given, every structure map zero, no unit.
  static GradedKOModule with_zero_maps(std::string name, const std::array<FGAbGroup, 8>& groups);
  static GradedKOModule zero(std::string name = "0");

  const FGAbGroup& group(int n) const { return groups[wrap(n, 8)]; }
  const AbHom& eta_at(int n) const { return eta[wrap(n, 8)]; }
  const AbHom& x_at(int n) const { return x[wrap(n, 8)]; }

  /// Same groups, maps and unit (name ignored).
  bool same_data(const GradedKOModule& other) const;
};

struct RelationViolation {
  std::string relation;  // "shape", "η³ = 0", "2η = 0", "ηx = 0", "x² = 4β_ℝ", "unit"
  int degree = 0;
  std::string detail;
};

struct ValidationReport {
  std::vector<RelationViolation> violations;
  bool valid() const { return violations.empty(); }
  std::string to_string() const;
};

ValidationReport validate(const GradedKOModule& m);
/// Throws RelationError for the first violation.
void require_valid(const GradedKOModule& m);

/// shift(M, n)_k = M_{k-n}. The unit survives only for n ≡ 0 mod 8.
GradedKOModule shift(const GradedKOModule& m, int n);

/// Degreewise sum with block-diagonal structure maps. A unit missing on one
/// side counts as zero there; the result has no unit only if neither has one.
GradedKOModule direct_sum(const GradedKOModule& a, const GradedKOModule& b);
GradedKOModule direct_sum(const std::vector<GradedKOModule>& summands, std::string name);

/// 2-periodic module over π*(ku); η acts trivially and so is not stored.
struct GradedKUModule {
  std::string name;
  std::array<FGAbGroup, 2> groups;
  const FGAbGroup& group(int n) const { return groups[wrap(n, 2)]; }
};

/// Real K-data of A with the complex K-data of A_C and the maps between them.
struct ComplexificationData {
  GradedKOModule real;
  GradedKUModule complex;
  std::array<AbHom, 8> c;  // K_n(A) -> K_n(A_C)
  std::array<AbHom, 8> u;  // K_n(A_C) -> K_n(A)

  const AbHom& c_at(int n) const { return c[wrap(n, 8)]; }
  const AbHom& u_at(int n) const { return u[wrap(n, 8)]; }
};

/// Shifts real and complex sides together.
ComplexificationData shift(const ComplexificationData& d, int n);
/// Summands of the real side follow direct_sum(GradedKOModule, GradedKOModule).
ComplexificationData direct_sum(const ComplexificationData& a, const ComplexificationData& b);
ComplexificationData direct_sum(const std::vector<ComplexificationData>& summands, std::string name);

struct WoodReport {
  bool shapes_ok = true;
  bool exact = true;
  std::string location;  // e.g. "K_3(A)" or "K_2(A_C)"
  std::optional<GroupElement> witness;
  std::string detail;
  bool ok() const { return shapes_ok && exact; }
  std::string to_string() const;
};

/// The 24 maps K_n →c K_n(A_C) →uβ⁻¹ K_{n-2} →η K_{n-1}, n = 0, 7, ..., 1,
/// read cyclically; exactness is checked at all 24 positions.
std::vector<AbHom> wood_sequence(const ComplexificationData& d);
/// Name of the group at position p of wood_sequence (source of map p).
std::string wood_position_name(int p);
WoodReport wood_check(const ComplexificationData& d);

/// Degrees n where u_n ∘ c_n differs from multiplication by 2.
std::vector<int> realification_failures(const ComplexificationData& d);

/// A degree-indexed family f_i : S_i -> T_i. Periodic families have exactly
/// eight maps indexed mod 8; otherwise maps[k] sits in degree first + k and
/// all other degrees are zero.
struct GradedMap {
  std::vector<AbHom> maps;
  int first = 0;
  bool periodic = true;

  std::optional<AbHom> at(int degree) const;
  int lowest() const { return periodic ? 0 : first; }
  int highest() const { return periodic ? 7 : first + static_cast<int>(maps.size()); }
};

/// Multiplication by n on every group of m.
GradedMap multiplication_map(const GradedKOModule& m, const Integer& n);

/// 0 -> coker f_i -> π_i(cofiber) -> ker f_{i-1} -> 0
struct ExtensionConstraint {
  int degree = 0;
  FGAbGroup sub;       // coker f_i
  FGAbGroup quotient;  // ker f_{i-1}
  std::vector<FGAbGroup> candidates;  // sorted, distinct; empty if truncated
  bool truncated = false;
  std::optional<FGAbGroup> determined;
};

/// All middle terms E of extensions 0 -> a -> E -> b -> 0, up to isomorphism
/// of E. Returns nullopt when more than `limit` extension classes would be visited.
std::optional<std::vector<FGAbGroup>> extension_candidates(const FGAbGroup& a, const FGAbGroup& b,
                                                           std::size_t limit = 1u << 16);

std::vector<ExtensionConstraint> cofiber_constraints(const GradedMap& f);

struct TateGroups {
  Quotient even;    // G/2
  Subobject odd;    // G[2]
};
TateGroups tate_c2_trivial(const FGAbGroup& g);

}  // namespace lcalc
