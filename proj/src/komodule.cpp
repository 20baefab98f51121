#include "lcalc/komodule.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace lcalc {

GradedKOModule GradedKOModule::with_zero_maps(std::string name, const std::array<FGAbGroup, 8>& groups) {
  GradedKOModule m;
  m.name = std::move(name);
  m.groups = groups;
  for (int n = 0; n < 8; ++n) {
    m.eta[n] = AbHom::zero(groups[n], groups[wrap(n + 1, 8)]);
    m.x[n] = AbHom::zero(groups[n], groups[wrap(n + 4, 8)]);
  }
  return m;
}

GradedKOModule GradedKOModule::zero(std::string name) { return with_zero_maps(std::move(name), {}); }

bool GradedKOModule::same_data(const GradedKOModule& other) const {
  return groups == other.groups && eta == other.eta && x == other.x && unit == other.unit;
}

// ---------------------------------------------------------------------------
// validation

std::string ValidationReport::to_string() const {
  if (valid()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    if (i) os << "\n";
    os << "relation " << v.relation << " fails in degree " << v.degree << ": " << v.detail;
  }
  return os.str();
}

ValidationReport validate(const GradedKOModule& m) {
  ValidationReport report;
  auto fail = [&](std::string relation, int degree, std::string detail) {
    report.violations.push_back({std::move(relation), degree, std::move(detail)});
  };

  for (int n = 0; n < 8; ++n) {
    if (m.eta[n].source() != m.group(n) || m.eta[n].target() != m.group(n + 1))
      fail("shape", n, "η map does not go K_" + std::to_string(n) + " -> K_" + std::to_string(n + 1));
    if (m.x[n].source() != m.group(n) || m.x[n].target() != m.group(n + 4))
      fail("shape", n, "x map does not go K_" + std::to_string(n) + " -> K_" + std::to_string(n + 4));
  }
  if (m.unit && m.unit->group() != m.group(0)) fail("unit", 0, "unit class does not lie in K_0");
  if (!report.valid()) return report;

  for (int n = 0; n < 8; ++n) {
    if (!(m.eta_at(n + 2) * m.eta_at(n + 1) * m.eta_at(n)).is_zero()) fail("η³ = 0", n, "η∘η∘η is nonzero");
    if (!(Integer(2) * m.eta_at(n)).is_zero()) fail("2η = 0", n, "2η is nonzero");
    if (!(m.eta_at(n + 4) * m.x_at(n)).is_zero()) fail("ηx = 0", n, "η∘x is nonzero");
    if (!(m.x_at(n + 1) * m.eta_at(n)).is_zero()) fail("ηx = 0", n, "x∘η is nonzero");
    if (m.x_at(n + 4) * m.x_at(n) != AbHom::scalar(m.group(n), 4)) fail("x² = 4β_ℝ", n, "x∘x differs from multiplication by 4");
  }
  return report;
}

void require_valid(const GradedKOModule& m) {
  const auto report = validate(m);
  if (report.valid()) return;
  const auto& v = report.violations.front();
  throw RelationError(v.relation, v.degree, "module " + m.name + ": relation " + v.relation + " fails in degree " +
                                                std::to_string(v.degree) + ": " + v.detail);
}

// ---------------------------------------------------------------------------
// shift and sum

GradedKOModule shift(const GradedKOModule& m, int n) {
  GradedKOModule out;
  out.name = m.name + "[" + std::to_string(n) + "]";
  for (int k = 0; k < 8; ++k) {
    out.groups[k] = m.group(k - n);
    out.eta[k] = m.eta_at(k - n);
    out.x[k] = m.x_at(k - n);
  }
  if (wrap(n, 8) == 0) out.unit = m.unit;
  return out;
}

GradedKOModule direct_sum(const GradedKOModule& a, const GradedKOModule& b) {
  std::array<DirectSum, 8> sums;
  for (int k = 0; k < 8; ++k) sums[k] = direct_sum(a.groups[k], b.groups[k]);
  GradedKOModule out;
  out.name = a.name + " ⊕ " + b.name;
  for (int k = 0; k < 8; ++k) {
    out.groups[k] = sums[k].group;
    const AbHom eta_blocks[] = {a.eta[k], b.eta[k]};
    out.eta[k] = direct_sum_map(sums[k], sums[wrap(k + 1, 8)], eta_blocks);
    const AbHom x_blocks[] = {a.x[k], b.x[k]};
    out.x[k] = direct_sum_map(sums[k], sums[wrap(k + 4, 8)], x_blocks);
  }
  if (a.unit || b.unit) {
    const GroupElement ua = a.unit.value_or(GroupElement::zero(a.groups[0]));
    const GroupElement ub = b.unit.value_or(GroupElement::zero(b.groups[0]));
    out.unit = sums[0].inclusions[0](ua) + sums[0].inclusions[1](ub);
  }
  return out;
}

GradedKOModule direct_sum(const std::vector<GradedKOModule>& summands, std::string name) {
  GradedKOModule out = GradedKOModule::zero();
  bool first = true;
  for (const auto& s : summands) {
    out = first ? s : direct_sum(out, s);
    first = false;
  }
  out.name = std::move(name);
  return out;
}

// ---------------------------------------------------------------------------
// complexification

ComplexificationData shift(const ComplexificationData& d, int n) {
  ComplexificationData out;
  out.real = shift(d.real, n);
  out.complex.name = d.complex.name + "[" + std::to_string(n) + "]";
  for (int k = 0; k < 2; ++k) out.complex.groups[k] = d.complex.group(k - n);
  for (int k = 0; k < 8; ++k) {
    out.c[k] = d.c_at(k - n);
    out.u[k] = d.u_at(k - n);
  }
  return out;
}

ComplexificationData direct_sum(const ComplexificationData& a, const ComplexificationData& b) {
  ComplexificationData out;
  out.real = direct_sum(a.real, b.real);
  out.complex.name = a.complex.name + " ⊕ " + b.complex.name;
  std::array<DirectSum, 2> cs;
  for (int k = 0; k < 2; ++k) {
    cs[k] = direct_sum(a.complex.groups[k], b.complex.groups[k]);
    out.complex.groups[k] = cs[k].group;
  }
  for (int n = 0; n < 8; ++n) {
    const DirectSum rs = direct_sum(a.real.groups[n], b.real.groups[n]);
    const AbHom c_blocks[] = {a.c[n], b.c[n]};
    out.c[n] = direct_sum_map(rs, cs[n % 2], c_blocks);
    const AbHom u_blocks[] = {a.u[n], b.u[n]};
    out.u[n] = direct_sum_map(cs[n % 2], rs, u_blocks);
  }
  return out;
}

ComplexificationData direct_sum(const std::vector<ComplexificationData>& summands, std::string name) {
  if (summands.empty()) throw StructuralError("direct sum of no complexification data");
  ComplexificationData out = summands.front();
  for (std::size_t i = 1; i < summands.size(); ++i) out = direct_sum(out, summands[i]);
  out.real.name = std::move(name);
  return out;
}

std::string wood_position_name(int p) {
  const int t = wrap(p, 24) / 3;
  const int n = wrap(-t, 8);
  switch (wrap(p, 24) % 3) {
    case 0: return "K_" + std::to_string(n) + "(A)";
    case 1: return "K_" + std::to_string(n) + "(A_C)";
    default: return "K_" + std::to_string(wrap(n - 2, 8)) + "(A)";
  }
}

std::vector<AbHom> wood_sequence(const ComplexificationData& d) {
  std::vector<AbHom> seq;
  for (int t = 0; t < 8; ++t) {
    const int n = wrap(-t, 8);
    seq.push_back(d.c_at(n));
    seq.emplace_back(d.complex.group(n), d.real.group(n - 2), d.u_at(n - 2).matrix());
    seq.push_back(d.real.eta_at(n - 2));
  }
  return seq;
}

std::string WoodReport::to_string() const {
  if (ok()) return "exact";
  if (!shapes_ok) return "malformed complexification data: " + detail;
  std::string out = "not exact at " + location + ": " + detail;
  if (witness) out += ", witness " + witness->to_string();
  return out;
}

WoodReport wood_check(const ComplexificationData& d) {
  WoodReport report;
  for (int n = 0; n < 8; ++n) {
    const bool c_ok = d.c[n].source() == d.real.group(n) && d.c[n].target() == d.complex.group(n);
    const bool u_ok = d.u[n].source() == d.complex.group(n) && d.u[n].target() == d.real.group(n);
    if (!c_ok || !u_ok) {
      report.shapes_ok = false;
      report.detail = std::string(c_ok ? "u" : "c") + " map in degree " + std::to_string(n) + " has the wrong source or target";
      return report;
    }
  }
  std::vector<AbHom> seq = wood_sequence(d);
  seq.push_back(seq[0]);
  seq.push_back(seq[1]);
  const ExactnessReport r = check_exact(seq);
  if (!r.exact) {
    report.exact = false;
    report.location = wood_position_name(static_cast<int>(r.failure->position));
    report.witness = r.failure->witness;
    report.detail = r.failure->kind == ExactnessFailure::Kind::ImageNotInKernel ? "image not contained in kernel"
                                                                                  : "kernel not contained in image";
  }
  return report;
}

std::vector<int> realification_failures(const ComplexificationData& d) {
  std::vector<int> out;
  for (int n = 0; n < 8; ++n)
    if (d.u[n] * d.c[n] != AbHom::scalar(d.real.group(n), 2)) out.push_back(n);
  return out;
}

// ---------------------------------------------------------------------------
// cofibers

std::optional<AbHom> GradedMap::at(int degree) const {
  if (periodic) {
    if (maps.size() != 8) throw StructuralError("periodic graded map needs eight components");
    return maps[wrap(degree, 8)];
  }
  const int k = degree - first;
  if (k < 0 || k >= static_cast<int>(maps.size())) return std::nullopt;
  return maps[k];
}

GradedMap multiplication_map(const GradedKOModule& m, const Integer& n) {
  GradedMap f;
  for (int k = 0; k < 8; ++k) f.maps.push_back(AbHom::scalar(m.groups[k], n));
  return f;
}

std::optional<std::vector<FGAbGroup>> extension_candidates(const FGAbGroup& a, const FGAbGroup& b, std::size_t limit) {
  const IntVector& alpha = a.invariants();
  const IntVector beta = b.torsion();
  IntVector free_part(b.rank(), Integer(0));
  const std::size_t m = alpha.size(), t = beta.size();

  // class of the j-th extension lives in A / b_j A = ⊕_i Z/gcd(α_i, b_j)
  std::vector<std::vector<Integer>> ranges(t, std::vector<Integer>(m));
  Integer count = 1;
  for (std::size_t j = 0; j < t; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      mpz_gcd(ranges[j][i].get_mpz_t(), alpha[i].get_mpz_t(), beta[j].get_mpz_t());
      count *= ranges[j][i];
    }
  if (count > Integer(static_cast<unsigned long>(limit))) return std::nullopt;

  std::set<FGAbGroup> seen;
  std::vector<std::vector<Integer>> cls(t, std::vector<Integer>(m, Integer(0)));
  for (;;) {
    IntMatrix rel = IntMatrix::diagonal(alpha).vstack(IntMatrix(t, m));
    IntMatrix ext(m + t, t);
    for (std::size_t j = 0; j < t; ++j) {
      for (std::size_t i = 0; i < m; ++i) ext(i, j) = -cls[j][i];
      ext(m + j, j) = beta[j];
    }
    IntVector inv = present(rel.hstack(ext)).group.invariants();
    inv.insert(inv.end(), free_part.begin(), free_part.end());
    seen.insert(FGAbGroup(inv));

    // odometer over all classes
    std::size_t pos = 0;
    for (; pos < t * m; ++pos) {
      auto& digit = cls[pos / m][pos % m];
      digit += 1;
      if (digit < ranges[pos / m][pos % m]) break;
      digit = 0;
    }
    if (pos == t * m) break;
  }
  return std::vector<FGAbGroup>(seen.begin(), seen.end());
}

std::vector<ExtensionConstraint> cofiber_constraints(const GradedMap& f) {
  std::vector<ExtensionConstraint> out;
  for (int i = f.lowest(); i <= f.highest(); ++i) {
    ExtensionConstraint e;
    e.degree = i;
    if (auto fi = f.at(i)) e.sub = cokernel(*fi).group;
    if (auto fp = f.at(i - 1)) e.quotient = kernel(*fp).group;
    if (auto cands = extension_candidates(e.sub, e.quotient)) {
      e.candidates = std::move(*cands);
    } else {
      e.truncated = true;
    }
    if (e.sub.is_trivial())
      e.determined = e.quotient;
    else if (e.quotient.is_trivial())
      e.determined = e.sub;
    else if (e.candidates.size() == 1)
      e.determined = e.candidates.front();
    out.push_back(std::move(e));
  }
  return out;
}

TateGroups tate_c2_trivial(const FGAbGroup& g) { return {mod_n(g, 2), n_torsion(g, 2)}; }

}  // namespace lcalc
