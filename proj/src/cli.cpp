#include "lcalc/cli.hpp"

#include <CLI11.hpp>

#include "lcalc/catalog.hpp"
#include "lcalc/genus.hpp"

namespace lcalc {

namespace {

struct VerificationFailure {};

std::string list(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + "]";
}

std::string matrix_string(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) s += (r ? ", " : "") + list(m.row_vector(r));
  return s + "]";
}

std::string group_line(const FGAbGroup& g) { return list(g.invariants()) + "  " + g.to_string(); }

IntVector parse_coords(const std::string& s) {
  IntVector v;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    Integer n;
    if (n.set_str(cur, 10) != 0) throw Error("bad coordinate \"" + cur + "\"");
    v.push_back(n);
    cur.clear();
  };
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '[' || c == ']') flush();
    else cur += c;
  }
  flush();
  return v;
}

GradedKOModule load_module(const std::string& file) { return parse_module(read_json_file(file)); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lcalc: L-groups of real C*-algebras from K-theory data"};
  app.name("lcalc");
  app.require_subcommand(1);

  std::string file, cfile, afile, bfile, pfile, name, series, acoords, bcoords;
  bool free = false, json_out = false;
  int degree = 0, li = 0, lj = 0;
  long kmax = 0, order = 20;
  unsigned k = 0;
  std::string c_value;
  std::vector<std::string> params;

  auto* lg = app.add_subcommand("lgroups", "the four L-groups of a module document");
  lg->add_option("FILE", file, "module document")->required();
  lg->add_flag("--free", free, "also the free L-groups (needs a unit class)");
  lg->add_option("--complex", cfile, "complexification document");

  auto* tau = app.add_subcommand("tau", "matrix of tau on K_n");
  tau->add_option("FILE", file)->required();
  tau->add_option("--degree", degree)->required();

  auto* prod = app.add_subcommand("product", "exterior product of L-classes");
  prod->add_option("AFILE", afile)->required();
  prod->add_option("BFILE", bfile)->required();
  prod->add_option("PAIRFILE", pfile)->required();
  prod->add_option("--i", li)->required();
  prod->add_option("--j", lj)->required();
  prod->add_option("--a", acoords)->required();
  prod->add_option("--b", bcoords)->required();

  auto* ex = app.add_subcommand("check-exact", "exactness of a sequence document");
  ex->add_option("SEQFILE", file)->required();

  auto* vc = app.add_subcommand("verify-catalog", "recompute catalog entries and compare");
  vc->add_option("NAME", name);
  vc->add_option("--param", params, "k=v");
  vc->add_flag("--json", json_out, "machine-readable report");

  auto* gen = app.add_subcommand("genus", "characteristic series of a genus");
  gen->add_option("--series", series)->required()->check(CLI::IsMember({"las", "signature", "trivial"}));
  gen->add_option("--order", order)->required()->check(CLI::Range(0L, 400L));

  auto* ahr = app.add_subcommand("ahr", "2-adic valuations of the moment sequence");
  ahr->add_option("--c", c_value)->required();
  ahr->add_option("--kmax", kmax)->required()->check(CLI::Range(1L, 500L));

  auto* fgl = app.add_subcommand("fgl-iso", "isomorphism from x+y+2xy to x+y+2^k xy");
  fgl->add_option("--k", k)->required()->check(CLI::Range(1u, 64u));
  fgl->add_option("--order", order)->required()->check(CLI::Range(1L, 200L));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*lg) {
      const auto m = load_module(file);
      const LGroups l = l_groups(m);
      for (int s = 0; s < 4; ++s) out << "L_" << s << ": " << group_line(l.groups[s]) << "\n";
      if (!cfile.empty()) {
        const auto d = parse_complex(read_json_file(cfile), m);
        const auto w = wood_check(d);
        out << "wood: " << w.to_string() << "\n";
        const auto [a1, a2] = alt_l12(d);
        out << "alt L_1: " << group_line(a1) << "\nalt L_2: " << group_line(a2) << "\n";
      }
      if (free) {
        std::optional<ComplexificationData> d;
        if (!cfile.empty()) d = parse_complex(read_json_file(cfile), m);
        const auto f = free_l_groups(m, d ? &*d : nullptr);
        out << "C: " << group_line(f.c.group) << "\n";
        out << "L^h_1: " << group_line(f.l1h) << "\n";
        if (f.l2h)
          out << "L^h_2: " << group_line(*f.l2h) << "\n";
        else
          out << "L^h_2: undetermined; " << f.l2h_constraint.to_string() << "\n";
        out << "L^h_3: " << group_line(f.l3h) << "\n";
      }
    } else if (*tau) {
      const auto m = load_module(file);
      const AbHom t = tau_map(m, degree);
      out << "source K_" << degree << ": " << group_line(t.source()) << "\n";
      out << "target L_" << wrap(degree, 4) << ": " << group_line(t.target()) << "\n";
      out << "matrix: " << matrix_string(t.matrix()) << "\n";
    } else if (*prod) {
      const auto a = load_module(afile);
      const auto b = load_module(bfile);
      const ProductDatum pd = parse_pairing(read_json_file(pfile), a, b);
      const auto v = validate_pairing(pd);
      if (!v.valid()) throw RelationError(v.violations.front().relation, v.violations.front().degree, v.to_string());
      const LGroups la = l_groups(a), lb = l_groups(b);
      const IntVector ac = parse_coords(acoords), bc = parse_coords(bcoords);
      if (ac.size() != la[li].num_generators())
        throw Error("--a needs " + std::to_string(la[li].num_generators()) + " coordinates");
      if (bc.size() != lb[lj].num_generators())
        throw Error("--b needs " + std::to_string(lb[lj].num_generators()) + " coordinates");
      const GroupElement x(la[li], ac), y(lb[lj], bc);
      const LProduct p = l_product(x, li, y, lj, pd);
      out << "L_" << p.slot << ": " << p.value.group().to_string() << "\n";
      out << "product: " << list(p.value.coords()) << "\n";
      if (p.by_analogy) out << "note: the (2,3) cell mirrors the (2,2) construction\n";
    } else if (*ex) {
      const auto seq = parse_sequence(read_json_file(file));
      const auto r = check_exact(seq);
      if (r.exact) {
        out << "exact\n";
      } else {
        out << r.to_string() << "\n";
        throw VerificationFailure{};
      }
    } else if (*vc) {
      Params p;
      for (const auto& kv : params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw Error("--param expects k=v, got \"" + kv + "\"");
        p[kv.substr(0, eq)] = std::stol(kv.substr(eq + 1));
      }
      const Catalog cat = Catalog::builtin();
      std::vector<CatalogEntry> entries;
      if (name.empty())
        entries = cat.entries(p);
      else
        entries.push_back(cat.entry(name, p));
      const auto reports = verify_all(entries);
      if (json_out)
        out << report_json(reports).dump(2) << "\n";
      else
        out << report_text(reports);
      for (const auto& r : reports)
        if (!r.pass()) throw VerificationFailure{};
    } else if (*gen) {
      const auto g = genus_by_name(series, static_cast<std::size_t>(order) + 1);
      const auto ks = characteristic_series(*g, static_cast<std::size_t>(order));
      for (std::size_t i = 0; i <= ks.order(); ++i) out << i << ": " << ks[i].get_str() << "\n";
    } else if (*ahr) {
      Integer c;
      if (c.set_str(c_value, 10) != 0) throw Error("--c expects an integer");
      const auto r = two_adic_obstruction(c, static_cast<unsigned>(kmax));
      out << "k v2 nonzero\n";
      for (const auto& row : r.rows)
        out << row.k << " " << (row.valuation ? std::to_string(*row.valuation) : "inf") << " " << (row.nonzero() ? "yes" : "no") << "\n";
      out << "strictly increasing: " << (r.strictly_increasing ? "yes" : "no") << "\n";
      out << "obstructed: " << (r.obstructed() ? "yes" : "no") << "\n";
    } else if (*fgl) {
      const auto r = fgl_isomorphism(k, static_cast<std::size_t>(order));
      for (std::size_t i = 1; i <= r.f.order(); ++i) out << i << ": " << r.f[i].get_str() << "\n";
      out << "integral: " << (r.integral ? "yes" : "no") << "\n";
      if (!r.solved) {
        out << "no solution in degree " << r.failed_degree << "\n";
        throw VerificationFailure{};
      }
    }
  } catch (const VerificationFailure&) {
    return 1;
  } catch (const RelationError& e) {
    err << "error: relation " << e.relation() << " fails: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace lcalc
