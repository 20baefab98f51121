#include "lcalc/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <regex>
#include <set>
#include <sstream>

#ifndef LCALC_DEFAULT_DATA_DIR
#define LCALC_DEFAULT_DATA_DIR "data"
#endif

namespace lcalc {

// ---------------------------------------------------------------------------
// expressions

Integer eval_int_expression(const std::string& expr, const Params& params) {
  static const std::regex re(R"(^\s*(-?\d*)\s*([a-z]?)\s*$)");
  std::smatch m;
  if (!std::regex_match(expr, m, re) || (m[1].str().empty() && m[2].str().empty()) || m[1].str() == "-")
    throw SchemaError("bad integer expression \"" + expr + "\"");
  Integer v = m[1].str().empty() ? Integer(1) : Integer(m[1].str());
  if (!m[2].str().empty()) {
    auto it = params.find(m[2].str());
    if (it == params.end()) throw SchemaError("expression \"" + expr + "\" uses unknown parameter " + m[2].str());
    v *= it->second;
  }
  return v;
}

FGAbGroup parse_group_expression(const std::string& expr, const Params& params) {
  std::vector<std::string> parts;
  std::string cur;
  const std::string oplus = "⊕";
  for (std::size_t i = 0; i < expr.size();) {
    if (expr.compare(i, oplus.size(), oplus) == 0 || expr[i] == '+') {
      parts.push_back(cur);
      cur.clear();
      i += expr[i] == '+' ? 1 : oplus.size();
    } else if (expr[i] == ' ') {
      ++i;
    } else {
      cur += expr[i++];
    }
  }
  parts.push_back(cur);
  IntVector orders;
  for (const auto& p : parts) {
    if (p == "0") continue;
    if (p == "Z") {
      orders.push_back(0);
    } else if (p.rfind("Z^", 0) == 0) {
      const Integer r = eval_int_expression(p.substr(2), params);
      if (r < 0) throw SchemaError("negative rank in \"" + expr + "\"");
      for (Integer k = 0; k < r; ++k) orders.push_back(0);
    } else if (p.rfind("Z/", 0) == 0) {
      const Integer d = eval_int_expression(p.substr(2), params);
      if (d <= 0) throw SchemaError("bad cyclic order in \"" + expr + "\"");
      if (d != 1) orders.push_back(d);
    } else {
      throw SchemaError("bad group expression \"" + expr + "\"");
    }
  }
  return canonicalize_orders(orders).group;
}

// ---------------------------------------------------------------------------
// building entries

namespace {

struct Built {
  std::optional<GradedKOModule> module;
  std::optional<ComplexificationData> complex;
};

AbHom cyclic_map(const FGAbGroup& s, const FGAbGroup& t, long v) {
  if (s.is_trivial() || t.is_trivial()) return AbHom::zero(s, t);
  return AbHom(s, t, IntMatrix{{v}});
}

Integer int_node(const Json& node, const Params& params, const std::string& path) {
  if (node.is_string()) return eval_int_expression(node.get<std::string>(), params);
  return parse_integer(node, path);
}

std::array<FGAbGroup, 8> forced_groups(const GradedMap& f, const std::string& what) {
  std::array<FGAbGroup, 8> g;
  for (const auto& c : cofiber_constraints(f)) {
    if (c.degree < 0 || c.degree > 7) continue;
    if (!c.determined) throw StructuralError(what + ": degree " + std::to_string(c.degree) + " is not forced");
    g[c.degree] = *c.determined;
  }
  return g;
}

// f_i = n x : K_{i-4} -> K_i
GradedMap x_multiple(const GradedKOModule& m, const Integer& n) {
  GradedMap f;
  for (int i = 0; i < 8; ++i) f.maps.push_back(n * m.x_at(i - 4));
  return f;
}

struct Unforced : Error {
  using Error::Error;
};

class Builder {
 public:
  Builder(std::string dir, Params params) : dir_(std::move(dir)), params_(std::move(params)) {}

  Built module(const Json& r, const std::string& path) {
    if (!r.is_object()) throw SchemaError(path + ": expected a recipe object");
    Built b;
    if (r.contains("file")) {
      b = load(r.at("file").get<std::string>(), r.contains("complex") ? r.at("complex").get<std::string>() : "");
    } else if (r.contains("shift")) {
      const int k = static_cast<int>(int_node(r.at("shift"), params_, path + ".shift").get_si());
      Built inner = module(r.at("of"), path + ".of");
      if (inner.complex) {
        b.complex = shift(*inner.complex, k);
        b.module = b.complex->real;
      } else {
        b.module = shift(*inner.module, k);
      }
    } else if (r.contains("sum")) {
      b = sum(r.at("sum"), path + ".sum");
    } else if (r.contains("cuntz")) {
      b = cuntz(int_node(r.at("cuntz"), params_, path + ".cuntz"));
    } else if (r.contains("e_real")) {
      b = e_real(int_node(r.at("e_real"), params_, path + ".e_real"));
    } else {
      throw SchemaError(path + ": unknown recipe");
    }
    if (r.contains("unit")) {
      const Json& u = r.at("unit");
      if (u == false) {
        b.module->unit.reset();
      } else {
        const IntVector c = parse_int_vector(u, path + ".unit");
        if (c.size() != b.module->groups[0].num_generators()) throw SchemaError(path + ".unit: length does not match K_0");
        b.module->unit = GroupElement(b.module->groups[0], c);
      }
      if (b.complex) b.complex->real.unit = b.module->unit;
    }
    if (r.contains("name")) {
      b.module->name = r.at("name").get<std::string>();
      if (b.complex) b.complex->real.name = b.module->name;
    }
    return b;
  }

  GradedMap map(const Json& r, const std::string& path) {
    if (r.contains("multiply")) return multiplication_map(*module(r.at("of"), path + ".of").module, int_node(r.at("multiply"), params_, path));
    if (r.contains("x_multiple")) return x_multiple(*module(r.at("of"), path + ".of").module, int_node(r.at("x_multiple"), params_, path));
    if (r.contains("explicit")) return explicit_map(r.at("explicit"), path + ".explicit");
    throw SchemaError(path + ": unknown map recipe");
  }

 private:
  std::string dir_;
  Params params_;

  Built load(const std::string& file, const std::string& cfile) {
    Built b;
    const Json doc = read_json_file(dir_ + "/modules/" + file);
    try {
      b.module = parse_module(doc);
      if (!cfile.empty()) b.complex = parse_complex(read_json_file(dir_ + "/modules/" + cfile), *b.module);
    } catch (const SchemaError& e) {
      throw SchemaError(file + ": " + e.what());
    }
    return b;
  }

  Built sum(const Json& items, const std::string& path) {
    if (!items.is_array() || items.empty()) throw SchemaError(path + ": expected a non-empty array");
    std::vector<Built> parts;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const std::string p = path + "[" + std::to_string(i) + "]";
      const Json& it = items[i];
      if (it.contains("repeat")) {
        const Integer n = int_node(it.at("repeat"), params_, p + ".repeat");
        if (n < 0) throw SchemaError(p + ": negative repeat count");
        const Built one = module(it.at("of"), p + ".of");
        for (Integer k = 0; k < n; ++k) parts.push_back(one);
      } else {
        parts.push_back(module(it, p));
      }
    }
    Built b;
    const bool all_complex = std::all_of(parts.begin(), parts.end(), [](const Built& x) { return x.complex.has_value(); });
    if (parts.empty()) {
      b.module = GradedKOModule::zero("0");
    } else if (all_complex) {
      std::vector<ComplexificationData> cs;
      for (auto& x : parts) cs.push_back(*x.complex);
      b.complex = direct_sum(cs, "sum");
      b.module = b.complex->real;
    } else {
      std::vector<GradedKOModule> ms;
      for (auto& x : parts) ms.push_back(*x.module);
      b.module = direct_sum(ms, "sum");
    }
    return b;
  }

  // K-data of O_{n+1}: ko/n
  Built cuntz(const Integer& n) {
    if (n <= 0) throw Error("cuntz: n must be positive");
    if (n == 2) return load("ko_mod2.json", "");
    if (mpz_even_p(n.get_mpz_t()))
      throw Unforced("for even n > 2 the extensions in the cofiber sequence of n on ko are not forced");
    Built ko = load("ko.json", "");
    const auto g = forced_groups(multiplication_map(*ko.module, n), "ko/" + n.get_str());
    GradedKOModule m = GradedKOModule::with_zero_maps("O_" + Integer(n + 1).get_str(), g);
    m.x[0] = cyclic_map(g[0], g[4], 1);
    m.x[4] = cyclic_map(g[4], g[0], 4);
    m.unit = GroupElement(g[0], IntVector(g[0].num_generators(), Integer(1)));
    require_valid(m);
    Built b;
    b.module = m;
    return b;
  }

  Built e_real(const Integer& n) {
    if (n <= 0) throw Error("e_real: n must be positive");
    Built ko = load("ko.json", "");
    const auto g = forced_groups(x_multiple(*ko.module, n), "E_" + Integer(2 * n).get_str());
    GradedKOModule m = GradedKOModule::with_zero_maps("E_" + Integer(2 * n).get_str(), g);
    m.eta[0] = cyclic_map(g[0], g[1], 1);
    m.eta[1] = cyclic_map(g[1], g[2], 1);
    m.x[0] = cyclic_map(g[0], g[4], 1);
    m.x[4] = cyclic_map(g[4], g[0], 4);
    require_valid(m);
    Built b;
    b.module = m;
    return b;
  }

  GradedMap explicit_map(const Json& r, const std::string& path) {
    GradedMap f;
    f.periodic = r.value("periodic", false);
    f.first = r.value("first", 0);
    const Json& src = r.at("source");
    const Json& tgt = r.at("target");
    const Json& maps = r.at("maps");
    if (src.size() != maps.size() || tgt.size() != maps.size())
      throw SchemaError(path + ": source, target and maps must have equal length");
    if (f.periodic && maps.size() != 8) throw SchemaError(path + ": a periodic map needs eight components");
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const std::string p = path + "[" + std::to_string(i) + "]";
      const FGAbGroup s = parse_group(src[i], path + ".source[" + std::to_string(i) + "]");
      const FGAbGroup t = parse_group(tgt[i], path + ".target[" + std::to_string(i) + "]");
      const IntMatrix mat = parse_matrix(maps[i], t.num_generators(), s.num_generators(), path + ".maps[" + std::to_string(i) + "]");
      f.maps.emplace_back(s, t, mat);
    }
    return f;
  }
};

Expectation parse_expectation(const Json& node, const Params& params, const std::string& path, bool slots) {
  if (!node.is_object()) throw SchemaError(path + ": expected an object");
  Expectation e;
  if (!node.contains("provenance"))
    throw SchemaError(path + ": expectation without provenance is refused");
  const Json& prov = node.at("provenance");
  if (!prov.is_object() || !prov.contains("kind") || !prov.at("kind").is_string())
    throw SchemaError(path + ".provenance: needs a \"kind\"");
  e.provenance.kind = prov.at("kind").get<std::string>();
  e.provenance.note = prov.value("note", "");
  if (e.provenance.kind != "published" && e.provenance.kind != "derived")
    throw SchemaError(path + ".provenance.kind: must be \"published\" or \"derived\"");
  if (e.provenance.kind == "derived" && e.provenance.note.empty())
    throw SchemaError(path + ".provenance.note: derived values must name their oracle");
  const Json& v = node.at("value");
  if (v.is_array()) {
    if (slots && v.size() != 4) throw SchemaError(path + ".value: expected four L-groups");
    for (std::size_t i = 0; i < v.size(); ++i)
      e.values[static_cast<int>(i)] = parse_group_expression(v[i].get<std::string>(), params);
  } else if (v.is_object()) {
    for (const auto& [k, g] : v.items()) e.values[std::stoi(k)] = parse_group_expression(g.get<std::string>(), params);
  } else {
    throw SchemaError(path + ".value: expected an array or an object");
  }
  return e;
}

const std::map<std::string, std::pair<long, std::string>>& param_limits() {
  static const std::map<std::string, std::pair<long, std::string>> limits = {
      {"n", {1, "n must be at least 1"}}, {"g", {0, "g must be non-negative"}}, {"r", {1, "r must be at least 1"}}};
  return limits;
}

}  // namespace

// ---------------------------------------------------------------------------
// catalog

std::string Catalog::default_data_dir() {
  if (const char* env = std::getenv("LCALC_DATA_DIR"); env && *env) return env;
  return LCALC_DEFAULT_DATA_DIR;
}

Catalog Catalog::load(const std::string& data_dir) {
  Catalog c;
  c.dir_ = data_dir;
  c.doc_ = read_json_file(data_dir + "/catalog.json");
  if (!c.doc_.contains("entries") || !c.doc_.at("entries").is_array()) throw SchemaError("$.entries: missing");
  std::set<std::string> seen;
  for (const auto& e : c.doc_.at("entries")) {
    const std::string n = e.at("name").get<std::string>();
    if (!seen.insert(n).second) throw SchemaError("$.entries: duplicate entry " + n);
  }
  return c;
}

Catalog Catalog::builtin() { return load(default_data_dir()); }

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& e : doc_.at("entries")) out.push_back(e.at("name").get<std::string>());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> Catalog::canonical_name(const std::string& name) const {
  for (const auto& e : doc_.at("entries")) {
    if (e.at("name") == name) return name;
    if (e.contains("aliases"))
      for (const auto& a : e.at("aliases"))
        if (a == name) return e.at("name").get<std::string>();
  }
  return std::nullopt;
}

const Json& Catalog::raw(const std::string& name) const {
  const auto canon = canonical_name(name);
  if (!canon) throw Error("unknown catalog entry \"" + name + "\"");
  for (const auto& e : doc_.at("entries"))
    if (e.at("name") == *canon) return e;
  throw Error("unknown catalog entry \"" + name + "\"");
}

Params Catalog::parameters(const std::string& name) const {
  const Json& e = raw(name);
  Params p;
  if (!e.contains("params")) return p;
  const Json defaults = doc_.value("defaults", Json::object());
  for (const auto& key : e.at("params")) {
    const std::string k = key.get<std::string>();
    if (e.contains("defaults") && e.at("defaults").contains(k))
      p[k] = e.at("defaults").at(k).get<long>();
    else if (defaults.contains(k))
      p[k] = defaults.at(k).get<long>();
    else
      throw SchemaError("$.defaults: no default for parameter " + k);
  }
  return p;
}

CatalogEntry Catalog::entry(const std::string& name, const Params& overrides) const {
  const Json& r = raw(name);
  CatalogEntry e;
  e.name = r.at("name").get<std::string>();
  e.title = r.value("title", e.name);
  e.params = parameters(e.name);
  for (const auto& [k, v] : overrides) {
    if (!e.params.count(k)) throw Error("entry " + e.name + " has no parameter " + k);
    e.params[k] = v;
  }
  for (const auto& [k, v] : e.params) {
    auto lim = param_limits().find(k);
    if (lim != param_limits().end() && v < lim->second.first) throw Error(e.name + ": " + lim->second.second);
  }
  if (r.contains("notes"))
    for (const auto& n : r.at("notes")) e.notes.push_back(n.get<std::string>());
  if (r.contains("out_of_scope")) {
    e.out_of_scope = r.at("out_of_scope").get<std::string>();
    return e;
  }
  const std::string path = "$.entries[" + e.name + "]";
  Builder b(dir_, e.params);
  if (r.contains("recipe")) {
    try {
      Built built = b.module(r.at("recipe"), path + ".recipe");
      e.module = std::move(built.module);
      e.module->name = e.name;
      if (built.complex) {
        e.complex = std::move(built.complex);
        e.complex->real.name = e.name;
      }
    } catch (const Unforced& u) {
      if (!r.contains("cofiber")) throw;
      e.partial = true;
      e.notes.push_back(std::string(u.what()) + "; only L_0 = K_0 and L_3 = K_7 are checked");
    }
  }
  if (r.contains("cofiber")) {
    e.cofiber = b.map(r.at("cofiber"), path + ".cofiber");
    e.module_from_cofiber = e.module.has_value();
  }
  if (r.contains("pins"))
    for (const auto& [k, g] : r.at("pins").items()) e.pins[std::stoi(k)] = parse_group_expression(g.get<std::string>(), e.params);
  const Json exp = r.value("expected", Json::object());
  if (exp.contains("l")) e.expected_l = parse_expectation(exp.at("l"), e.params, path + ".expected.l", true);
  if (e.partial && e.expected_l) {
    e.expected_l->values.erase(1);
    e.expected_l->values.erase(2);
  }
  if (exp.contains("free_l")) e.expected_free_l = parse_expectation(exp.at("free_l"), e.params, path + ".expected.free_l", false);
  if (exp.contains("cofiber")) e.expected_cofiber = parse_expectation(exp.at("cofiber"), e.params, path + ".expected.cofiber", false);
  return e;
}

std::vector<CatalogEntry> Catalog::entries(const Params& overrides) const {
  std::vector<CatalogEntry> out;
  for (const auto& n : names()) {
    Params mine;
    const Params declared = parameters(n);
    for (const auto& [k, v] : overrides)
      if (declared.count(k)) mine[k] = v;
    out.push_back(entry(n, mine));
  }
  return out;
}

CatalogEntry builtin(const std::string& name, const Params& params) { return Catalog::builtin().entry(name, params); }

// ---------------------------------------------------------------------------
// verification

bool EntryReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<std::string> EntryReport::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c.name);
  return out;
}

namespace {

template <class F>
CheckResult run_check(const std::string& name, F&& body) {
  CheckResult r{name, false, ""};
  try {
    body(r);
  } catch (const std::exception& ex) {
    r.pass = false;
    r.detail = ex.what();
  }
  return r;
}

std::string compare_groups(const std::map<int, FGAbGroup>& expected, const std::map<int, FGAbGroup>& got,
                           const std::string& label) {
  std::string out;
  for (const auto& [k, g] : expected) {
    auto it = got.find(k);
    const std::string have = it == got.end() ? "nothing" : it->second.to_string();
    if (it == got.end() || it->second != g) {
      if (!out.empty()) out += "; ";
      out += label + " " + std::to_string(k) + ": expected " + g.to_string() + ", computed " + have;
    }
  }
  return out;
}

// cofiber groups, using pins where the sequence leaves a choice
std::map<int, FGAbGroup> resolve_cofiber(const CatalogEntry& e, std::string& problems) {
  std::map<int, FGAbGroup> got;
  for (const auto& c : cofiber_constraints(*e.cofiber)) {
    auto pin = e.pins.find(c.degree);
    if (c.determined) {
      got[c.degree] = *c.determined;
      if (pin != e.pins.end() && pin->second != *c.determined)
        problems += "pin in degree " + std::to_string(c.degree) + " contradicts the forced value; ";
    } else if (pin != e.pins.end()) {
      if (std::find(c.candidates.begin(), c.candidates.end(), pin->second) == c.candidates.end() && !c.truncated)
        problems += "pin in degree " + std::to_string(c.degree) + " is not among the extensions; ";
      else
        got[c.degree] = pin->second;
    }
  }
  return got;
}

}  // namespace

EntryReport verify(const CatalogEntry& e) {
  EntryReport rep;
  rep.entry = e.name;
  rep.params = e.params;
  rep.notes = e.notes;
  if (!e.out_of_scope.empty()) {
    rep.skipped = true;
    rep.summary = "out of scope: " + e.out_of_scope;
    return rep;
  }

  std::optional<LGroups> lg;
  if (e.module) {
    rep.checks.push_back(run_check("validate", [&](CheckResult& r) {
      const auto v = validate(*e.module);
      r.pass = v.valid();
      r.detail = v.to_string();
    }));
    rep.checks.push_back(run_check("l_groups", [&](CheckResult& r) {
      lg = l_groups(*e.module);
      rep.summary = "L = " + lg->to_string();
      if (!e.expected_l) {
        r.pass = true;
        r.detail = "no expectation recorded";
        return;
      }
      std::map<int, FGAbGroup> got;
      for (int s = 0; s < 4; ++s) got[s] = lg->groups[s];
      r.detail = compare_groups(e.expected_l->values, got, "slot");
      r.pass = r.detail.empty();
      if (r.pass) r.detail = lg->to_string() + " [" + e.expected_l->provenance.kind + "]";
    }));
  }

  if (e.partial && e.cofiber && e.expected_l) {
    rep.checks.push_back(run_check("l_groups", [&](CheckResult& r) {
      std::map<int, FGAbGroup> got;
      std::string record;
      for (const auto& c : cofiber_constraints(*e.cofiber)) {
        if (c.degree < 0 || c.degree > 7) continue;
        record += (record.empty() ? "" : "; ") + ("K_" + std::to_string(c.degree) + " ");
        if (c.determined) {
          record += "= " + c.determined->to_string();
        } else {
          record += "in {";
          for (std::size_t i = 0; i < c.candidates.size(); ++i) record += (i ? ", " : "") + c.candidates[i].to_string();
          record += "}";
        }
        for (int s = 0; s < 4; ++s)
          if (kL_K_degree[s] == c.degree && (s == 0 || s == 3) && c.determined) got[s] = *c.determined;
      }
      rep.summary = "partial: " + record;
      r.detail = compare_groups(e.expected_l->values, got, "slot");
      r.pass = r.detail.empty();
      if (r.pass) r.detail = "slots 0 and 3 match; constraint record " + record;
    }));
  }

  if (e.complex) {
    rep.checks.push_back(run_check("wood", [&](CheckResult& r) {
      const auto w = wood_check(*e.complex);
      r.pass = w.ok();
      r.detail = w.to_string();
    }));
    rep.checks.push_back(run_check("uc", [&](CheckResult& r) {
      const auto f = realification_failures(*e.complex);
      r.pass = f.empty();
      for (int n : f) r.detail += (r.detail.empty() ? "u∘c ≠ 2 in degree " : ", ") + std::to_string(n);
    }));
    rep.checks.push_back(run_check("alt_l12", [&](CheckResult& r) {
      const LGroups l = lg ? *lg : l_groups(e.complex->real);
      const auto [a1, a2] = alt_l12(*e.complex);
      r.pass = a1 == l.groups[1] && a2 == l.groups[2];
      r.detail = "(" + a1.to_string() + ", " + a2.to_string() + ")";
      if (!r.pass) r.detail += " differs from (" + l.groups[1].to_string() + ", " + l.groups[2].to_string() + ")";
    }));
  }

  if (e.module && e.module->unit) {
    rep.checks.push_back(run_check("free_l", [&](CheckResult& r) {
      const FreeLGroups f = free_l_groups(*e.module, e.complex ? &*e.complex : nullptr);
      std::map<int, FGAbGroup> got{{1, f.l1h}, {3, f.l3h}};
      if (f.l2h) got[2] = *f.l2h;
      std::ostringstream os;
      os << "L1h = " << f.l1h.to_string() << ", L2h = " << (f.l2h ? f.l2h->to_string() : f.l2h_constraint.to_string())
         << ", L3h = " << f.l3h.to_string();
      if (e.expected_free_l) {
        r.detail = compare_groups(e.expected_free_l->values, got, "free slot");
        r.pass = r.detail.empty();
        if (r.pass) r.detail = os.str();
      } else {
        r.pass = true;
        r.detail = os.str() + " (no expectation recorded)";
      }
    }));
  }

  if (e.cofiber) {
    rep.checks.push_back(run_check("cofiber", [&](CheckResult& r) {
      std::string problems;
      const auto got = resolve_cofiber(e, problems);
      std::map<int, FGAbGroup> want;
      if (e.expected_cofiber) want = e.expected_cofiber->values;
      if (e.module_from_cofiber) {
        const auto cons = cofiber_constraints(*e.cofiber);
        for (const auto& c : cons) {
          if (c.degree < 0 || c.degree > 7) continue;
          const FGAbGroup& have = e.module->groups[c.degree];
          if (c.determined ? *c.determined != have
                           : std::find(c.candidates.begin(), c.candidates.end(), have) == c.candidates.end())
            problems += "K_" + std::to_string(c.degree) + " = " + have.to_string() + " is not allowed by the sequence; ";
        }
      }
      const std::string diff = compare_groups(want, got, "degree");
      r.pass = problems.empty() && diff.empty();
      r.detail = problems + diff;
      if (!e.module) {
        std::string s;
        for (const auto& [k, g] : got)
          if (want.count(k)) s += (s.empty() ? "" : ", ") + ("π" + std::to_string(k) + " = " + g.to_string());
        if (!s.empty()) rep.summary = s;
        if (r.pass) r.detail = s;
      } else if (r.pass) {
        r.detail = "K-groups consistent with the cofiber sequence";
      }
    }));
  }
  return rep;
}

std::vector<EntryReport> verify_all(const std::vector<CatalogEntry>& entries) {
  std::vector<std::future<EntryReport>> jobs;
  for (const auto& e : entries) jobs.push_back(std::async(std::launch::async, [&e] { return verify(e); }));
  std::vector<EntryReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  std::sort(out.begin(), out.end(), [](const EntryReport& a, const EntryReport& b) { return a.entry < b.entry; });
  return out;
}

namespace {

std::string params_string(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : ", ") + k + "=" + std::to_string(v);
  return s;
}

}  // namespace

std::string report_text(const std::vector<EntryReport>& reports) {
  std::ostringstream os;
  std::size_t failed = 0, skipped = 0;
  for (const auto& r : reports) {
    const std::string status = r.skipped ? "skipped" : r.pass() ? "pass" : "FAIL";
    if (r.skipped) ++skipped;
    else if (!r.pass()) ++failed;
    os << r.entry;
    if (!r.params.empty()) os << " (" << params_string(r.params) << ")";
    os << ": " << status;
    if (!r.summary.empty()) os << "  " << r.summary;
    os << "\n";
    for (const auto& c : r.checks) os << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL") << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
  }
  os << reports.size() - failed - skipped << " passed, " << failed << " failed, " << skipped << " skipped\n";
  return os.str();
}

Json report_json(const std::vector<EntryReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) {
    Json j;
    j["entry"] = r.entry;
    j["params"] = Json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["status"] = r.skipped ? "skipped" : r.pass() ? "pass" : "fail";
    j["summary"] = r.summary;
    j["checks"] = Json::array();
    for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out.push_back(j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// mutation

namespace {

FGAbGroup flip(const FGAbGroup& g) {
  if (g.is_trivial()) return FGAbGroup::cyclic(2);
  IntVector orders = g.invariants();
  orders.push_back(2);
  return canonicalize_orders(orders).group;
}

}  // namespace

std::vector<Mutation> mutations(const CatalogEntry& e) {
  std::vector<Mutation> out;
  auto each = [&](std::optional<Expectation> CatalogEntry::*field, const std::string& check, const std::string& label) {
    if (!(e.*field)) return;
    for (const auto& [k, g] : (e.*field)->values) {
      Mutation m{e, check, ""};
      (m.entry.*field)->values[k] = flip(g);
      m.description = label + " " + std::to_string(k) + ": " + g.to_string() + " -> " + flip(g).to_string();
      out.push_back(std::move(m));
    }
  };
  each(&CatalogEntry::expected_l, "l_groups", "L slot");
  each(&CatalogEntry::expected_free_l, "free_l", "free L slot");
  each(&CatalogEntry::expected_cofiber, "cofiber", "cofiber degree");
  return out;
}

}  // namespace lcalc
