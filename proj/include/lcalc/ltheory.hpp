#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcalc/komodule.hpp"

namespace lcalc {

/// K-degree carrying L-slot s: L_0 = K_0, L_1 = K_1/η, L_2 = K_6[η], L_3 = K_7.
constexpr std::array<int, 4> kL_K_degree = {0, 1, 6, 7};

struct LGroups {
  std::array<FGAbGroup, 4> groups;
  AbHom l1_projection;  // K_1 -> L_1
  AbHom l2_inclusion;   // L_2 -> K_6

  const FGAbGroup& operator[](int slot) const { return groups[wrap(slot, 4)]; }
  /// Element of K_{kd(slot)} representing an element of L_slot.
  GroupElement lift(int slot, const GroupElement& l) const;
  /// L_slot element of a K-element; slot 2 requires the element to be η-torsion.
  GroupElement descend(int slot, const GroupElement& k) const;
  std::string to_string() const;
};

/// Validates the module first (RelationError on failure).
LGroups l_groups(const GradedKOModule& m);

/// (L_1, L_2) from complex data: ker(u: K_{-1}(A_C) -> K_{-1}(A)) and coker(c: K_0(A) -> K_0(A_C)).
std::pair<FGAbGroup, FGAbGroup> alt_l12(const ComplexificationData& d);

/// τ on π_n, n >= 0, as a hom K_n -> L_{n mod 4} in the witness groups of l_groups.
AbHom tau_map(const GradedKOModule& m, int n);

/// Pairing K_p(A) ⊗ K_q(B) -> K_{p+q}(A⊗B) on generator pairs.
struct ProductDatum {
  GradedKOModule a, b, ab;
  /// (p, q) -> table[s][t], the product of generator s of K_p(A) and generator t of K_q(B).
  std::map<std::pair<int, int>, std::vector<std::vector<IntVector>>> pairing;

  bool has(int p, int q) const { return pairing.count({wrap(p, 8), wrap(q, 8)}) > 0; }
  /// Throws MissingDataError when the degree pair is absent.
  GroupElement multiply(int p, int q, const GroupElement& x, const GroupElement& y) const;
};

/// Shape and well-definedness of every table, then KO-linearity in each
/// slot wherever the needed degree pairs are present.
ValidationReport validate_pairing(const ProductDatum& pd);

struct LProduct {
  GroupElement value;  // in L_{i+j} of the product algebra
  int slot = 0;
  bool by_analogy = false;  // the (2,3) cell
};

/// a ∈ L_i(A), b ∈ L_j(B) given in the witness groups of l_groups.
/// Throws RelationError "no half exists" / "halving ambiguous" when the
/// halving cells cannot be evaluated uniquely.
LProduct l_product(const GroupElement& a, int i, const GroupElement& b, int j, const ProductDatum& pd);

/// Tate target of the boundary map out of L_n.
FGAbGroup tate_target(const GradedKOModule& m, int n);

/// The map L_n(A) -> Ĥ^{n}(C_2; K_0(A)). Degree 2 mod 4 needs complex data.
AbHom boundary_to_tate(const GradedKOModule& m, int n, const ComplexificationData* d = nullptr);

struct L2hConstraint {
  FGAbGroup c_two_torsion;    // C[2]
  FGAbGroup k2_mod_eta;       // K_2 / η
  std::optional<FGAbGroup> sub;  // coker(C[2] -> K_2/η), when known
  FGAbGroup quotient;         // ker(η: C/2 -> K_1)
  std::vector<FGAbGroup> candidates;
  std::optional<FGAbGroup> determined;
  std::string to_string() const;
};

struct FreeLGroups {
  Subobject c;          // C = ⟨[A]⟩ ⊆ K_0
  FGAbGroup l1h;
  FGAbGroup l3h;
  AbHom l3h_to_k7;
  std::optional<FGAbGroup> l2h;  // when the exact sequence pins it down
  L2hConstraint l2h_constraint;
};

FreeLGroups free_l_groups(const GradedKOModule& m, const ComplexificationData* d = nullptr);

}  // namespace lcalc
