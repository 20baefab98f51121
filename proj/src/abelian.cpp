#include "lcalc/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace lcalc {

// ---------------------------------------------------------------------------
// FGAbGroup

bool is_canonical_invariant_list(const IntVector& invariants, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  bool seen_free = false;
  const Integer* previous = nullptr;
  for (const auto& d : invariants) {
    if (d < 0) return fail("negative invariant " + d.get_str());
    if (d == 1) return fail("invariant value 1 is not allowed");
    if (d == 0) {
      seen_free = true;
      continue;
    }
    if (seen_free) return fail("torsion invariant " + d.get_str() + " after a free summand");
    if (previous && !mpz_divisible_p(d.get_mpz_t(), previous->get_mpz_t()))
      return fail("invariants " + previous->get_str() + ", " + d.get_str() + " violate divisibility order");
    previous = &d;
  }
  return true;
}

FGAbGroup::FGAbGroup(IntVector invariants) : invariants_(std::move(invariants)) {
  std::string why;
  if (!is_canonical_invariant_list(invariants_, &why)) throw Error("non-canonical invariant list: " + why);
}

FGAbGroup FGAbGroup::free(std::size_t rank) { return FGAbGroup(IntVector(rank, Integer(0))); }

FGAbGroup FGAbGroup::cyclic(const Integer& order) {
  if (order == 1) return FGAbGroup();
  return FGAbGroup(IntVector{abs(order)});
}

std::size_t FGAbGroup::rank() const {
  return static_cast<std::size_t>(std::count(invariants_.begin(), invariants_.end(), Integer(0)));
}

IntVector FGAbGroup::torsion() const {
  IntVector out;
  for (const auto& d : invariants_)
    if (d != 0) out.push_back(d);
  return out;
}

std::optional<Integer> FGAbGroup::order() const {
  Integer n = 1;
  for (const auto& d : invariants_) {
    if (d == 0) return std::nullopt;
    n *= d;
  }
  return n;
}

IntVector FGAbGroup::reduce(const IntVector& coords) const {
  if (coords.size() != invariants_.size())
    throw StructuralError("element has " + std::to_string(coords.size()) + " coordinates, group " + to_string() +
                          " has " + std::to_string(invariants_.size()) + " generators");
  IntVector out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) out[i] = reduce_mod(coords[i], invariants_[i]);
  return out;
}

std::string FGAbGroup::to_string() const {
  if (invariants_.empty()) return "0";
  std::vector<std::string> parts;
  const std::size_t r = rank();
  if (r == 1) parts.emplace_back("Z");
  if (r > 1) parts.push_back("Z^" + std::to_string(r));
  for (const auto& d : invariants_)
    if (d != 0) parts.push_back("Z/" + d.get_str());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " ⊕ ";
    out += parts[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(FGAbGroup group, IntVector coords)
    : group_(std::move(group)), coords_(group_.reduce(coords)) {}

GroupElement GroupElement::zero(const FGAbGroup& group) {
  return GroupElement(group, IntVector(group.num_generators(), Integer(0)));
}

GroupElement GroupElement::generator(const FGAbGroup& group, std::size_t i) {
  IntVector v(group.num_generators(), Integer(0));
  v.at(i) = 1;
  return GroupElement(group, v);
}

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

std::string GroupElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += coords_[i].get_str();
  }
  return out + ")";
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  if (group_ != other.group_) throw StructuralError("adding elements of different groups");
  IntVector v = coords_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.coords_[i];
  return GroupElement(group_, v);
}

GroupElement GroupElement::operator-(const GroupElement& other) const { return *this + (-other); }

GroupElement GroupElement::operator-() const {
  IntVector v = coords_;
  for (auto& c : v) c = -c;
  return GroupElement(group_, v);
}

GroupElement operator*(const Integer& n, const GroupElement& g) {
  IntVector v = g.coords_;
  for (auto& c : v) c *= n;
  return GroupElement(g.group_, v);
}

// ---------------------------------------------------------------------------
// AbHom

bool is_well_defined(const FGAbGroup& source, const FGAbGroup& target, const IntMatrix& matrix, std::string* why) {
  if (matrix.rows() != target.num_generators() || matrix.cols() != source.num_generators()) {
    if (why)
      *why = "matrix is " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) + ", expected " +
             std::to_string(target.num_generators()) + "x" + std::to_string(source.num_generators());
    return false;
  }
  for (std::size_t j = 0; j < matrix.cols(); ++j) {
    const Integer& d = source.invariant(j);
    if (d == 0) continue;
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
      const Integer& t = target.invariant(i);
      const Integer image = d * matrix(i, j);
      const bool ok = t == 0 ? image == 0 : mpz_divisible_p(image.get_mpz_t(), t.get_mpz_t()) != 0;
      if (!ok) {
        if (why)
          *why = "generator " + std::to_string(j) + " of order " + d.get_str() + " maps to an element of order not dividing it (coordinate " +
                 std::to_string(i) + ")";
        return false;
      }
    }
  }
  return true;
}

AbHom::AbHom(FGAbGroup source, FGAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.num_generators() || matrix_.cols() != source_.num_generators())
    throw StructuralError("hom " + source_.to_string() + " -> " + target_.to_string() + ": matrix is " +
                          std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()));
  std::string why;
  if (!is_well_defined(source_, target_, matrix_, &why))
    throw WellDefinednessError("hom " + source_.to_string() + " -> " + target_.to_string() + " is not well-defined: " + why);
  for (std::size_t i = 0; i < matrix_.rows(); ++i)
    for (std::size_t j = 0; j < matrix_.cols(); ++j) matrix_(i, j) = reduce_mod(matrix_(i, j), target_.invariant(i));
}

AbHom AbHom::identity(const FGAbGroup& g) { return AbHom(g, g, IntMatrix::identity(g.num_generators())); }

AbHom AbHom::zero(const FGAbGroup& source, const FGAbGroup& target) {
  return AbHom(source, target, IntMatrix(target.num_generators(), source.num_generators()));
}

AbHom AbHom::scalar(const FGAbGroup& g, const Integer& n) {
  return AbHom(g, g, n * IntMatrix::identity(g.num_generators()));
}

GroupElement AbHom::operator()(const GroupElement& x) const {
  if (x.group() != source_)
    throw StructuralError("applying hom with source " + source_.to_string() + " to element of " + x.group().to_string());
  return apply(x.coords());
}

GroupElement AbHom::apply(const IntVector& coords) const { return GroupElement(target_, matrix_ * coords); }

AbHom AbHom::after(const AbHom& other) const {
  if (other.target_ != source_)
    throw StructuralError("cannot compose: " + other.target_.to_string() + " is not " + source_.to_string());
  return AbHom(other.source_, target_, matrix_ * other.matrix_);
}

AbHom operator+(const AbHom& a, const AbHom& b) {
  if (a.source_ != b.source_ || a.target_ != b.target_) throw StructuralError("adding homs with different shapes");
  return AbHom(a.source_, a.target_, a.matrix_ + b.matrix_);
}

AbHom operator-(const AbHom& a, const AbHom& b) { return a + (-b); }

AbHom AbHom::operator-() const { return AbHom(source_, target_, Integer(-1) * matrix_); }

AbHom operator*(const Integer& n, const AbHom& f) { return AbHom(f.source_, f.target_, n * f.matrix_); }

// ---------------------------------------------------------------------------
// Presentations and subgroups

Presentation present(const IntMatrix& relations) {
  const std::size_t n = relations.rows();
  const SmithDecomposition snf = smith_normal_form(relations);
  std::vector<std::size_t> kept;
  IntVector invariants;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer d = i < snf.rank ? Integer(snf.diagonal(i, i)) : Integer(0);
    if (d == 1) continue;
    kept.push_back(i);
    invariants.push_back(d);
  }
  Presentation p{FGAbGroup(invariants), IntMatrix(kept.size(), n), IntMatrix(n, kept.size())};
  for (std::size_t k = 0; k < kept.size(); ++k) {
    for (std::size_t c = 0; c < n; ++c) p.to_canonical(k, c) = reduce_mod(snf.left(kept[k], c), invariants[k]);
    for (std::size_t r = 0; r < n; ++r) p.from_canonical(r, k) = snf.left_inverse(r, kept[k]);
  }
  return p;
}

Presentation canonicalize_orders(const IntVector& orders) { return present(IntMatrix::diagonal(orders)); }

namespace {

// Generators (columns) of {c in Z^k : M c lies in the span of diag(t)}.
IntMatrix kernel_generators(const IntMatrix& m, const IntVector& target_orders) {
  const IntMatrix a = m.hstack(IntMatrix::diagonal(target_orders));
  const IntMatrix lattice = kernel_lattice(a);
  return lattice.block(0, 0, m.cols(), lattice.cols());
}

struct RawSubgroup {
  FGAbGroup group;
  IntMatrix inclusion;  // ambient coordinates of each canonical generator
};

// Subgroup of ⊕ Z/orders[i] generated by the columns of `gens`.
RawSubgroup generated_subgroup(const IntVector& orders, const IntMatrix& gens) {
  const std::size_t p = gens.cols();
  const IntMatrix rel_lattice = kernel_lattice(gens.hstack(IntMatrix::diagonal(orders)));
  const IntMatrix relations = rel_lattice.block(0, 0, p, rel_lattice.cols());
  Presentation pres = present(relations);
  IntMatrix incl = gens * pres.from_canonical;
  for (std::size_t r = 0; r < incl.rows(); ++r)
    for (std::size_t c = 0; c < incl.cols(); ++c) incl(r, c) = reduce_mod(incl(r, c), orders[r]);
  return {pres.group, incl};
}

}  // namespace

Subobject kernel(const AbHom& f) {
  const IntMatrix gens = kernel_generators(f.matrix(), f.target().invariants());
  RawSubgroup sub = generated_subgroup(f.source().invariants(), gens);
  return {sub.group, AbHom(sub.group, f.source(), sub.inclusion)};
}

Quotient cokernel(const AbHom& f) {
  Presentation pres = present(f.matrix().hstack(IntMatrix::diagonal(f.target().invariants())));
  return {pres.group, AbHom(f.target(), pres.group, pres.to_canonical)};
}

Subobject image(const AbHom& f) {
  RawSubgroup sub = generated_subgroup(f.target().invariants(), f.matrix());
  return {sub.group, AbHom(sub.group, f.target(), sub.inclusion)};
}

Subobject n_torsion(const FGAbGroup& g, const Integer& n) {
  if (n <= 0) throw Error("n_torsion: n must be positive");
  return kernel(AbHom::scalar(g, n));
}

Quotient mod_n(const FGAbGroup& g, const Integer& n) {
  if (n <= 0) throw Error("mod_n: n must be positive");
  return cokernel(AbHom::scalar(g, n));
}

FiberProduct fiber_product(const AbHom& f, const AbHom& g) {
  if (f.target() != g.target()) throw StructuralError("fiber_product: maps have different targets");
  const std::size_t ka = f.source().num_generators();
  const std::size_t kb = g.source().num_generators();
  IntVector orders = f.source().invariants();
  orders.insert(orders.end(), g.source().invariants().begin(), g.source().invariants().end());
  const IntMatrix difference = f.matrix().hstack(Integer(-1) * g.matrix());
  RawSubgroup sub = generated_subgroup(orders, kernel_generators(difference, f.target().invariants()));
  const std::size_t s = sub.group.num_generators();
  return {sub.group, AbHom(sub.group, f.source(), sub.inclusion.block(0, 0, ka, s)),
          AbHom(sub.group, g.source(), sub.inclusion.block(ka, 0, kb, s))};
}

DirectSum direct_sum(std::span<const FGAbGroup> summands) {
  IntVector orders;
  for (const auto& g : summands) orders.insert(orders.end(), g.invariants().begin(), g.invariants().end());
  const Presentation pres = canonicalize_orders(orders);
  DirectSum out{pres.group, {}, {}};
  const std::size_t total = pres.group.num_generators();
  std::size_t offset = 0;
  for (const auto& g : summands) {
    const std::size_t k = g.num_generators();
    out.inclusions.emplace_back(g, pres.group, pres.to_canonical.block(0, offset, total, k));
    out.projections.emplace_back(pres.group, g, pres.from_canonical.block(offset, 0, k, total));
    offset += k;
  }
  return out;
}

DirectSum direct_sum(const FGAbGroup& a, const FGAbGroup& b) {
  const FGAbGroup both[] = {a, b};
  return direct_sum(std::span<const FGAbGroup>(both));
}

AbHom direct_sum_map(const DirectSum& source, const DirectSum& target, std::span<const AbHom> blocks) {
  if (blocks.size() != source.projections.size() || blocks.size() != target.inclusions.size())
    throw StructuralError("direct_sum_map: block count mismatch");
  AbHom total = AbHom::zero(source.group, target.group);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    total = total + target.inclusions[i] * blocks[i] * source.projections[i];
  return total;
}

bool is_injective(const AbHom& f) { return kernel(f).group.is_trivial(); }
bool is_surjective(const AbHom& f) { return cokernel(f).group.is_trivial(); }
bool is_isomorphism(const AbHom& f) { return is_injective(f) && is_surjective(f); }

std::optional<GroupElement> preimage(const AbHom& f, const GroupElement& y) {
  if (y.group() != f.target()) throw StructuralError("preimage: element is not in the target");
  const IntMatrix a = f.matrix().hstack(IntMatrix::diagonal(f.target().invariants()));
  IntVector sol;
  if (!solve_integer(a, y.coords(), sol)) return std::nullopt;
  sol.resize(f.source().num_generators());
  return GroupElement(f.source(), sol);
}

bool in_image(const AbHom& f, const GroupElement& y) { return preimage(f, y).has_value(); }

AbHom factor_through_mono(const AbHom& f, const AbHom& mono) {
  if (f.target() != mono.target()) throw StructuralError("factor_through_mono: targets differ");
  if (!is_injective(mono)) throw StructuralError("factor_through_mono: map is not injective");
  const std::size_t k = f.source().num_generators();
  IntMatrix m(mono.source().num_generators(), k);
  for (std::size_t j = 0; j < k; ++j) {
    const GroupElement y = f(GroupElement::generator(f.source(), j));
    const auto x = preimage(mono, y);
    if (!x) throw RelationError("factorization", -1, "image of generator " + std::to_string(j) + " (" + y.to_string() + ") escapes the subgroup");
    for (std::size_t i = 0; i < x->coords().size(); ++i) m(i, j) = x->coords()[i];
  }
  return AbHom(f.source(), mono.source(), m);
}

AbHom descend_through_epi(const AbHom& f, const AbHom& epi) {
  if (f.source() != epi.source()) throw StructuralError("descend_through_epi: sources differ");
  const FGAbGroup& q = epi.target();
  IntMatrix m(f.target().num_generators(), q.num_generators());
  for (std::size_t j = 0; j < q.num_generators(); ++j) {
    const auto lift = preimage(epi, GroupElement::generator(q, j));
    if (!lift) throw StructuralError("descend_through_epi: map is not surjective");
    const GroupElement y = f(*lift);
    for (std::size_t i = 0; i < y.coords().size(); ++i) m(i, j) = y.coords()[i];
  }
  std::string why;
  if (!is_well_defined(q, f.target(), m, &why))
    throw RelationError("factorization", -1, "map does not vanish on the kernel: " + why);
  AbHom g(q, f.target(), m);
  if (g * epi != f) throw RelationError("factorization", -1, "map does not vanish on the kernel");
  return g;
}

std::vector<GroupElement> enumerate_elements(const FGAbGroup& g, std::size_t limit) {
  const auto order = g.order();
  if (!order) throw Error("enumerate_elements: group " + g.to_string() + " is infinite");
  if (*order > Integer(static_cast<unsigned long>(limit))) throw Error("enumerate_elements: group " + g.to_string() + " too large");
  std::vector<GroupElement> out;
  IntVector coords(g.num_generators(), Integer(0));
  for (;;) {
    out.emplace_back(g, coords);
    std::size_t i = coords.size();
    while (i > 0) {
      --i;
      coords[i] += 1;
      if (coords[i] < g.invariant(i)) break;
      coords[i] = 0;
      if (i == 0) return out;
    }
    if (coords.empty()) return out;
  }
}

std::vector<GroupElement> all_halves(const GroupElement& c) {
  const FGAbGroup& g = c.group();
  const AbHom twice = AbHom::scalar(g, 2);
  const auto base = preimage(twice, c);
  if (!base) return {};
  const Subobject torsion = n_torsion(g, 2);
  std::vector<GroupElement> out;
  for (const auto& t : enumerate_elements(torsion.group)) out.push_back(*base + torsion.inclusion(t));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Exactness

std::string ExactnessReport::to_string() const {
  if (exact) return "exact";
  std::ostringstream os;
  os << "not exact at position " << failure->position << ": "
     << (failure->kind == ExactnessFailure::Kind::ImageNotInKernel ? "image not contained in kernel"
                                                                    : "kernel not contained in image")
     << ", witness " << failure->witness.to_string() << " in " << failure->witness.group().to_string();
  return os.str();
}

ExactnessReport check_exact(std::span<const AbHom> maps) {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    if (maps[i].target() != maps[i + 1].source())
      throw StructuralError("sequence not composable at position " + std::to_string(i + 1) + ": " +
                            maps[i].target().to_string() + " vs " + maps[i + 1].source().to_string());
  ExactnessReport report;
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    const AbHom& in = maps[i];
    const AbHom& out = maps[i + 1];
    const std::size_t position = i + 1;
    for (std::size_t j = 0; j < in.source().num_generators(); ++j) {
      const GroupElement y = in(GroupElement::generator(in.source(), j));
      if (!out(y).is_zero()) {
        report.exact = false;
        report.failure = ExactnessFailure{position, ExactnessFailure::Kind::ImageNotInKernel, y};
        return report;
      }
    }
    const Subobject ker = kernel(out);
    for (std::size_t j = 0; j < ker.group.num_generators(); ++j) {
      const GroupElement y = ker.inclusion(GroupElement::generator(ker.group, j));
      if (!in_image(in, y)) {
        report.exact = false;
        report.failure = ExactnessFailure{position, ExactnessFailure::Kind::KernelNotInImage, y};
        return report;
      }
    }
  }
  return report;
}

}  // namespace lcalc
