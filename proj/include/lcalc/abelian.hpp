#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcalc/errors.hpp"
#include "lcalc/matrix.hpp"

namespace lcalc {

/// Finitely generated abelian group in invariant-factor form.
///
/// The invariant list holds torsion orders d_1 | d_2 | ... (each >= 2) followed
/// by zeros, one per infinite cyclic summand. Generator i has order
/// invariants()[i] (0 meaning infinite). Two groups are equal iff their
/// invariant lists are.
class FGAbGroup {
 public:
  FGAbGroup() = default;
  /// Throws Error unless `invariants` is already canonical.
  explicit FGAbGroup(IntVector invariants);

  static FGAbGroup free(std::size_t rank);
  static FGAbGroup cyclic(const Integer& order);  // 0 gives Z, 1 the trivial group

  const IntVector& invariants() const { return invariants_; }
  std::size_t num_generators() const { return invariants_.size(); }
  const Integer& invariant(std::size_t i) const { return invariants_[i]; }
  std::size_t rank() const;
  IntVector torsion() const;
  bool is_trivial() const { return invariants_.empty(); }
  bool is_finite() const { return rank() == 0; }
  /// Group order; nullopt when infinite.
  std::optional<Integer> order() const;

  /// Canonical coordinates of an arbitrary integer vector.
  IntVector reduce(const IntVector& coords) const;

  /// "Z^2 ⊕ Z/2 ⊕ Z/4", "0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const FGAbGroup&, const FGAbGroup&) = default;
  friend bool operator<(const FGAbGroup& a, const FGAbGroup& b) { return a.invariants_ < b.invariants_; }

 private:
  IntVector invariants_;
};

/// Checks the canonical-form rules without constructing a group.
bool is_canonical_invariant_list(const IntVector& invariants, std::string* why = nullptr);

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(FGAbGroup group, IntVector coords);

  static GroupElement zero(const FGAbGroup& group);
  static GroupElement generator(const FGAbGroup& group, std::size_t i);

  const FGAbGroup& group() const { return group_; }
  const IntVector& coords() const { return coords_; }
  bool is_zero() const;
  std::string to_string() const;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-(const GroupElement& other) const;
  GroupElement operator-() const;
  friend GroupElement operator*(const Integer& n, const GroupElement& g);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.coords_ < b.coords_; }

 private:
  FGAbGroup group_;
  IntVector coords_;
};

/// Homomorphism given by its matrix on canonical generators: column j is the
/// image of source generator j.
class AbHom {
 public:
  AbHom() = default;
  /// Reduces entries modulo target invariants; throws WellDefinednessError if
  /// some generator of order d is not sent to a d-torsion element.
  AbHom(FGAbGroup source, FGAbGroup target, IntMatrix matrix);

  static AbHom identity(const FGAbGroup& g);
  static AbHom zero(const FGAbGroup& source, const FGAbGroup& target);
  static AbHom scalar(const FGAbGroup& g, const Integer& n);

  const FGAbGroup& source() const { return source_; }
  const FGAbGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  GroupElement operator()(const GroupElement& x) const;
  GroupElement apply(const IntVector& coords) const;
  bool is_zero() const { return matrix_.is_zero(); }

  /// this ∘ other
  AbHom after(const AbHom& other) const;
  friend AbHom operator*(const AbHom& g, const AbHom& f) { return g.after(f); }
  friend AbHom operator+(const AbHom& a, const AbHom& b);
  friend AbHom operator-(const AbHom& a, const AbHom& b);
  AbHom operator-() const;
  friend AbHom operator*(const Integer& n, const AbHom& f);
  friend bool operator==(const AbHom&, const AbHom&) = default;

 private:
  FGAbGroup source_;
  FGAbGroup target_;
  IntMatrix matrix_;
};

/// Checks the well-definedness rule for a raw matrix.
bool is_well_defined(const FGAbGroup& source, const FGAbGroup& target, const IntMatrix& matrix,
                     std::string* why = nullptr);

struct Subobject {
  FGAbGroup group;
  AbHom inclusion;
};

struct Quotient {
  FGAbGroup group;
  AbHom projection;
};

struct FiberProduct {
  FGAbGroup group;
  AbHom first;   // to the source of f
  AbHom second;  // to the source of g
};

struct DirectSum {
  FGAbGroup group;
  std::vector<AbHom> inclusions;
  std::vector<AbHom> projections;
};

/// Z^n modulo the column span of `relations` (n rows), in canonical form.
struct Presentation {
  FGAbGroup group;
  IntMatrix to_canonical;    // canonical coords of each Z^n generator
  IntMatrix from_canonical;  // each canonical generator as a vector in Z^n
};
Presentation present(const IntMatrix& relations);

/// Canonical form of ⊕ Z/orders[i] (orders may be 0, 1, or out of divisibility order).
Presentation canonicalize_orders(const IntVector& orders);

Subobject kernel(const AbHom& f);
Quotient cokernel(const AbHom& f);
Subobject image(const AbHom& f);
Subobject n_torsion(const FGAbGroup& g, const Integer& n);
Quotient mod_n(const FGAbGroup& g, const Integer& n);
FiberProduct fiber_product(const AbHom& f, const AbHom& g);
DirectSum direct_sum(std::span<const FGAbGroup> summands);
DirectSum direct_sum(const FGAbGroup& a, const FGAbGroup& b);
/// f ⊕ g between two direct sums built by direct_sum().
AbHom direct_sum_map(const DirectSum& source, const DirectSum& target, std::span<const AbHom> blocks);

bool is_injective(const AbHom& f);
bool is_surjective(const AbHom& f);
bool is_isomorphism(const AbHom& f);

/// Some x with f(x) = y.
std::optional<GroupElement> preimage(const AbHom& f, const GroupElement& y);
bool in_image(const AbHom& f, const GroupElement& y);

/// The unique g with mono ∘ g == f; throws RelationError("factorization", ...)
/// if the image of f escapes the image of mono, StructuralError if mono is not injective.
AbHom factor_through_mono(const AbHom& f, const AbHom& mono);
/// The unique g with g ∘ epi == f; throws RelationError if f does not kill ker(epi).
AbHom descend_through_epi(const AbHom& f, const AbHom& epi);

/// Every d with 2d = c. Always finite: solutions form a coset of G[2].
std::vector<GroupElement> all_halves(const GroupElement& c);

/// All elements of a finite group, in lexicographic coordinate order.
/// Throws if the group is infinite or larger than `limit`.
std::vector<GroupElement> enumerate_elements(const FGAbGroup& g, std::size_t limit = 1u << 16);

struct ExactnessFailure {
  enum class Kind { ImageNotInKernel, KernelNotInImage };
  std::size_t position = 0;  // index of the group where exactness fails
  Kind kind = Kind::ImageNotInKernel;
  GroupElement witness;
};

struct ExactnessReport {
  bool exact = true;
  std::optional<ExactnessFailure> failure;
  std::string to_string() const;
};

/// maps[i] : G_i -> G_{i+1}; checks im(maps[i-1]) == ker(maps[i]) at every
/// interior group G_1 .. G_{n-1}. Throws StructuralError if consecutive maps
/// do not compose.
ExactnessReport check_exact(std::span<const AbHom> maps);

}  // namespace lcalc
