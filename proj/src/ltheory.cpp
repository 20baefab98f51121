#include "lcalc/ltheory.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lcalc {

// ---------------------------------------------------------------------------
// L-groups

GroupElement LGroups::lift(int slot, const GroupElement& l) const {
  switch (wrap(slot, 4)) {
    case 1: return *preimage(l1_projection, l);
    case 2: return l2_inclusion(l);
    default: return l;
  }
}

GroupElement LGroups::descend(int slot, const GroupElement& k) const {
  switch (wrap(slot, 4)) {
    case 1: return l1_projection(k);
    case 2: {
      auto l = preimage(l2_inclusion, k);
      if (!l) throw RelationError("ηx = 0", 6, "element " + k.to_string() + " of K_6 is not η-torsion");
      return *l;
    }
    default: return k;
  }
}

std::string LGroups::to_string() const {
  return "(" + groups[0].to_string() + ", " + groups[1].to_string() + ", " + groups[2].to_string() + ", " +
         groups[3].to_string() + ")";
}

LGroups l_groups(const GradedKOModule& m) {
  require_valid(m);
  LGroups out;
  const Quotient l1 = cokernel(m.eta_at(0));
  const Subobject l2 = kernel(m.eta_at(6));
  out.groups = {m.group(0), l1.group, l2.group, m.group(7)};
  out.l1_projection = l1.projection;
  out.l2_inclusion = l2.inclusion;
  return out;
}

std::pair<FGAbGroup, FGAbGroup> alt_l12(const ComplexificationData& d) {
  const AbHom u_minus1(d.complex.group(-1), d.real.group(-1), d.u_at(-1).matrix());
  return {kernel(u_minus1).group, cokernel(d.c_at(0)).group};
}

// ---------------------------------------------------------------------------
// τ

AbHom tau_map(const GradedKOModule& m, int n) {
  if (n < 0) throw Error("tau_map: degree must be non-negative");
  const LGroups l = l_groups(m);
  const int q = n / 4, r = n % 4;
  AbHom f = AbHom::identity(m.group(n));
  int deg = n;
  for (int k = 0; k < q; ++k) {
    f = Integer(2) * m.x_at(deg) * f;
    deg += 4;
  }
  if (r >= 2) f = m.x_at(deg) * f;
  switch (r) {
    case 1: return l.l1_projection * f;
    case 2:
      try {
        return factor_through_mono(f, l.l2_inclusion);
      } catch (const RelationError&) {
        throw RelationError("ηx = 0", 6, "τ in degree " + std::to_string(n) + " leaves the η-torsion of K_6");
      }
    default: return f;
  }
}

// ---------------------------------------------------------------------------
// products

GroupElement ProductDatum::multiply(int p, int q, const GroupElement& x, const GroupElement& y) const {
  const auto it = pairing.find({wrap(p, 8), wrap(q, 8)});
  if (it == pairing.end())
    throw MissingDataError("no pairing given for degrees (" + std::to_string(wrap(p, 8)) + ", " + std::to_string(wrap(q, 8)) + ")");
  if (x.group() != a.group(p) || y.group() != b.group(q)) throw StructuralError("pairing inputs lie in the wrong groups");
  const FGAbGroup& target = ab.group(p + q);
  IntVector sum(target.num_generators(), Integer(0));
  const auto& table = it->second;
  for (std::size_t s = 0; s < x.coords().size(); ++s)
    for (std::size_t t = 0; t < y.coords().size(); ++t) {
      const Integer coeff = x.coords()[s] * y.coords()[t];
      if (coeff == 0) continue;
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += coeff * table[s][t][k];
    }
  return GroupElement(target, sum);
}

ValidationReport validate_pairing(const ProductDatum& pd) {
  ValidationReport report;
  auto fail = [&](std::string rel, int p, int q, std::string detail) {
    report.violations.push_back(
        {std::move(rel), p, "degrees (" + std::to_string(p) + ", " + std::to_string(q) + "): " + std::move(detail)});
  };

  for (const auto& [pq, table] : pd.pairing) {
    const auto [p, q] = pq;
    const FGAbGroup& ga = pd.a.group(p);
    const FGAbGroup& gb = pd.b.group(q);
    const FGAbGroup& gt = pd.ab.group(p + q);
    bool shape = table.size() == ga.num_generators();
    for (const auto& row : table) {
      shape = shape && row.size() == gb.num_generators();
      for (const auto& v : row) shape = shape && v.size() == gt.num_generators();
    }
    if (!shape) {
      fail("shape", p, q, "table does not match the generator counts");
      continue;
    }
    for (std::size_t s = 0; s < table.size(); ++s)
      for (std::size_t t = 0; t < table[s].size(); ++t) {
        const GroupElement v(gt, table[s][t]);
        if (!(ga.invariant(s) * v).is_zero() || !(gb.invariant(t) * v).is_zero())
          fail("bilinearity", p, q, "product of generators " + std::to_string(s) + ", " + std::to_string(t) +
                                        " has order not dividing both generator orders");
      }
  }
  if (!report.valid()) return report;

  // (ηa)*b = η(a*b) = a*(ηb), and likewise for x
  struct Action {
    const char* name;
    int step;
    const AbHom& (GradedKOModule::*at)(int) const;
  };
  const Action actions[] = {{"η-linearity", 1, &GradedKOModule::eta_at}, {"x-linearity", 4, &GradedKOModule::x_at}};
  for (const auto& [pq, table] : pd.pairing) {
    const auto [p, q] = pq;
    for (const auto& act : actions) {
      for (std::size_t s = 0; s < table.size(); ++s)
        for (std::size_t t = 0; t < table[s].size(); ++t) {
          const GroupElement ea = GroupElement::generator(pd.a.group(p), s);
          const GroupElement eb = GroupElement::generator(pd.b.group(q), t);
          const GroupElement prod = pd.multiply(p, q, ea, eb);
          const GroupElement acted = (pd.ab.*act.at)(p + q)(prod);
          if (pd.has(p + act.step, q) && pd.multiply(p + act.step, q, (pd.a.*act.at)(p)(ea), eb) != acted)
            fail(act.name, p, q, "left action disagrees on generators " + std::to_string(s) + ", " + std::to_string(t));
          if (pd.has(p, q + act.step) && pd.multiply(p, q + act.step, ea, (pd.b.*act.at)(q)(eb)) != acted)
            fail(act.name, p, q, "right action disagrees on generators " + std::to_string(s) + ", " + std::to_string(t));
        }
    }
  }
  return report;
}

namespace {

GroupElement unique_half(const GroupElement& target, int slot) {
  const auto halves = all_halves(target);
  if (halves.empty()) throw RelationError("no half exists", slot, "no half of " + target.to_string() + " exists");
  if (halves.size() > 1)
    throw RelationError("halving ambiguous", slot,
                        "halving ambiguous: " + std::to_string(halves.size()) + " halves of " + target.to_string());
  return halves.front();
}

}  // namespace

LProduct l_product(const GroupElement& a, int i, const GroupElement& b, int j, const ProductDatum& pd) {
  i = wrap(i, 4);
  j = wrap(j, 4);
  const LGroups la = l_groups(pd.a), lb = l_groups(pd.b), lab = l_groups(pd.ab);
  if (a.group() != la[i] || b.group() != lb[j]) throw StructuralError("product inputs do not lie in the L-groups");
  const int p = kL_K_degree[i], q = kL_K_degree[j];
  const GroupElement s = pd.multiply(p, q, la.lift(i, a), lb.lift(j, b));
  const GradedKOModule& m = pd.ab;

  LProduct out;
  out.slot = wrap(i + j, 4);
  const int lo = std::min(i, j), hi = std::max(i, j);
  if (lo == 0) {
    out.value = lab.descend(hi, s);
  } else if (lo == 1 && hi == 1) {
    out.value = lab.descend(2, m.x_at(2)(s));
  } else if (lo == 1 && hi == 2) {
    out.value = s;
  } else if (lo == 1 && hi == 3) {
    out.value = Integer(2) * s;
  } else if (lo == 2 && hi == 2) {
    out.value = unique_half(m.x_at(4)(s), 0);
  } else if (lo == 2 && hi == 3) {
    std::set<GroupElement> images;
    const auto halves = all_halves(m.x_at(5)(s));
    if (halves.empty()) throw RelationError("no half exists", 1, "no half of x·(a*b) exists in K_1");
    for (const auto& h : halves) images.insert(lab.l1_projection(h));
    if (images.size() > 1)
      throw RelationError("halving ambiguous", 1, "halving ambiguous: halves differ modulo η");
    out.value = *images.begin();
    out.by_analogy = true;
  } else {
    out.value = lab.descend(2, Integer(2) * s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tate boundary maps

FGAbGroup tate_target(const GradedKOModule& m, int n) {
  return wrap(n, 2) == 0 ? mod_n(m.group(0), 2).group : n_torsion(m.group(0), 2).group;
}

AbHom boundary_to_tate(const GradedKOModule& m, int n, const ComplexificationData* d) {
  const LGroups l = l_groups(m);
  const FGAbGroup& k0 = m.group(0);
  switch (wrap(n, 4)) {
    case 0: return mod_n(k0, 2).projection;
    case 1: return AbHom::zero(l[1], n_torsion(k0, 2).group);
    case 3: return factor_through_mono(m.eta_at(7), n_torsion(k0, 2).inclusion);
    default: break;
  }
  if (!d) throw MissingDataError("the boundary map out of L_2 needs complexification data");
  if (d->real.groups != m.groups || d->real.eta != m.eta)
    throw StructuralError("complexification data belongs to a different module");
  const Quotient half = mod_n(k0, 2);
  const AbHom u6 = d->u_at(6);
  const AbHom u0(d->complex.group(6), k0, d->u_at(0).matrix());  // multiplication by β⁻³ is the identity here
  const AbHom through = half.projection * u0;

  IntMatrix mat(half.group.num_generators(), l[2].num_generators());
  for (std::size_t g = 0; g < l[2].num_generators(); ++g) {
    const GroupElement y = l.l2_inclusion(GroupElement::generator(l[2], g));
    const auto z = preimage(u6, y);
    if (!z) throw RelationError("Wood exactness", 6, "element " + y.to_string() + " of K_6[η] has no complex lift");
    const GroupElement v = through(*z);
    for (std::size_t k = 0; k < v.coords().size(); ++k) mat(k, g) = v.coords()[k];
  }
  if (!(through * kernel(u6).inclusion).is_zero())
    throw RelationError("lift independence", 6, "the boundary map depends on the chosen complex lift");
  return AbHom(l[2], half.group, mat);
}

// ---------------------------------------------------------------------------
// free L-groups

std::string L2hConstraint::to_string() const {
  std::ostringstream os;
  os << "C[2] = " << c_two_torsion.to_string() << " -> K_2/η = " << k2_mod_eta.to_string() << "; sub = "
     << (sub ? sub->to_string() : std::string("unknown")) << "; quotient = " << quotient.to_string();
  if (determined) os << "; L_2^h = " << determined->to_string();
  else if (!candidates.empty()) {
    os << "; candidates {";
    for (std::size_t i = 0; i < candidates.size(); ++i) os << (i ? ", " : "") << candidates[i].to_string();
    os << "}";
  }
  return os.str();
}

FreeLGroups free_l_groups(const GradedKOModule& m, const ComplexificationData* d) {
  require_valid(m);
  if (!m.unit) throw MissingDataError("free L-groups need the unit class of " + m.name);
  const FGAbGroup z = FGAbGroup::free(1);
  const FGAbGroup& k0 = m.group(0);

  FreeLGroups out;
  out.c = image(AbHom(z, k0, IntMatrix::column(m.unit->coords())));
  const GroupElement eta_unit = m.eta_at(0)(*m.unit);
  out.l1h = cokernel(AbHom(z, m.group(1), IntMatrix::column(eta_unit.coords()))).group;
  const FiberProduct fp = fiber_product(m.eta_at(7), out.c.inclusion);
  out.l3h = fp.group;
  out.l3h_to_k7 = fp.first;

  L2hConstraint& rec = out.l2h_constraint;
  const Subobject c2 = n_torsion(out.c.group, 2);
  const Quotient k2eta = cokernel(m.eta_at(1));
  rec.c_two_torsion = c2.group;
  rec.k2_mod_eta = k2eta.group;
  if (c2.group.is_trivial()) {
    rec.sub = k2eta.group;
  } else if (k2eta.group.is_trivial()) {
    rec.sub = FGAbGroup();
  } else if (d) {
    // C[2] -> K_0(A) -> ker(K_0(A_C) -> K_0(A)) ≅ K_2/η through c_2
    IntMatrix col(k2eta.group.num_generators(), c2.group.num_generators());
    for (std::size_t g = 0; g < c2.group.num_generators(); ++g) {
      const GroupElement e = out.c.inclusion(c2.inclusion(GroupElement::generator(c2.group, g)));
      const GroupElement v = d->c_at(0)(e);
      const AbHom c2map(m.group(2), d->complex.group(0), d->c_at(2).matrix());
      const auto w = preimage(c2map, v);
      if (!w) throw RelationError("Wood exactness", 2, "c(" + e.to_string() + ") is not in the image of K_2");
      const GroupElement pw = k2eta.projection(*w);
      for (std::size_t k = 0; k < pw.coords().size(); ++k) col(k, g) = pw.coords()[k];
    }
    rec.sub = cokernel(AbHom(c2.group, k2eta.group, col)).group;
  }
  const Quotient cmod2 = mod_n(out.c.group, 2);
  const AbHom eta_on_c = descend_through_epi(m.eta_at(0) * out.c.inclusion, cmod2.projection);
  rec.quotient = kernel(eta_on_c).group;
  if (rec.sub) {
    if (auto cands = extension_candidates(*rec.sub, rec.quotient)) rec.candidates = *cands;
    if (rec.quotient.is_trivial()) rec.determined = *rec.sub;
    else if (rec.sub->is_trivial()) rec.determined = rec.quotient;
    else if (rec.candidates.size() == 1) rec.determined = rec.candidates.front();
  }

  const auto c_order = out.c.group.order();
  const bool odd = c_order && mpz_odd_p(c_order->get_mpz_t());
  if (odd || (c2.group.is_trivial() && !eta_unit.is_zero())) out.l2h = k2eta.group;
  else out.l2h = rec.determined;
  return out;
}

}  // namespace lcalc
