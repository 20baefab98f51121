#include "lcalc/io.hpp"

#include <fstream>
#include <sstream>

namespace lcalc {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) { throw SchemaError(path + ": " + msg); }

const Json& member(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) schema(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema(path, "missing key \"" + key + "\"");
  return *it;
}

std::string degree_key(int n) { return std::to_string(n); }

void check_degree_keys(const Json& obj, int period, const std::string& path) {
  if (!obj.is_object()) schema(path, "expected an object keyed by degree");
  for (const auto& [key, _] : obj.items()) {
    bool ok = !key.empty() && key.size() <= 2 && key.find_first_not_of("0123456789") == std::string::npos;
    if (ok) ok = std::stoi(key) < period && degree_key(std::stoi(key)) == key;
    if (!ok) schema(path, "unexpected degree key \"" + key + "\" (use \"0\"..\"" + std::to_string(period - 1) + "\")");
  }
}

std::string expect_string(const Json& node, const std::string& path) {
  if (!node.is_string()) schema(path, "expected a string");
  return node.get<std::string>();
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("$: " + what + " is not valid JSON (" + e.what() + ")");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("$: cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

Integer parse_integer(const Json& node, const std::string& path) {
  if (node.is_number_integer()) return node.is_number_unsigned() ? Integer(node.get<unsigned long>()) : Integer(node.get<long>());
  if (node.is_string()) {
    Integer n;
    if (n.set_str(node.get<std::string>(), 10) == 0) return n;
  }
  schema(path, "expected an integer");
}

IntVector parse_int_vector(const Json& node, const std::string& path) {
  if (!node.is_array()) schema(path, "expected an array of integers");
  IntVector out;
  for (std::size_t i = 0; i < node.size(); ++i) out.push_back(parse_integer(node[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

FGAbGroup parse_group(const Json& node, const std::string& path) {
  const IntVector inv = parse_int_vector(node, path);
  for (std::size_t i = 0; i < inv.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (inv[i] == 1) schema(p, "invariant 1 is not allowed (omit trivial summands)");
    if (inv[i] < 0) schema(p, "negative invariant");
  }
  std::string why;
  if (!is_canonical_invariant_list(inv, &why)) schema(path, why);
  return FGAbGroup(inv);
}

IntMatrix parse_matrix(const Json& node, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!node.is_array()) schema(path, "expected an array of rows");
  if (rows * cols == 0 && node.empty()) return IntMatrix(rows, cols);
  if (node.size() != rows)
    schema(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(node.size()));
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    const IntVector row = parse_int_vector(node[r], rp);
    if (row.size() != cols)
      schema(rp, "expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

namespace {

AbHom parse_hom(const Json& node, const FGAbGroup& s, const FGAbGroup& t, const std::string& path) {
  const IntMatrix m = parse_matrix(node, t.num_generators(), s.num_generators(), path);
  try {
    return AbHom(s, t, m);
  } catch (const Error& e) {
    schema(path, e.what());
  }
}

// degree -> hom; absent degrees are zero maps
template <class Src, class Tgt>
std::array<AbHom, 8> parse_family(const Json& maps, const std::string& key, Src source, Tgt target,
                                  const std::string& path) {
  std::array<AbHom, 8> out;
  const Json* fam = nullptr;
  if (maps.is_object() && maps.contains(key)) {
    fam = &maps.at(key);
    check_degree_keys(*fam, 8, path + "." + key);
  }
  for (int n = 0; n < 8; ++n) {
    const FGAbGroup s = source(n), t = target(n);
    if (fam && fam->contains(degree_key(n)))
      out[n] = parse_hom(fam->at(degree_key(n)), s, t, path + "." + key + "." + degree_key(n));
    else
      out[n] = AbHom::zero(s, t);
  }
  return out;
}

template <std::size_t P>
std::array<FGAbGroup, P> parse_groups(const Json& doc, const std::string& path) {
  const Json& g = member(doc, "groups", path);
  check_degree_keys(g, static_cast<int>(P), path + ".groups");
  std::array<FGAbGroup, P> out;
  for (std::size_t n = 0; n < P; ++n) {
    const std::string key = degree_key(static_cast<int>(n));
    out[n] = parse_group(member(g, key, path + ".groups"), path + ".groups." + key);
  }
  return out;
}

void check_periodicity(const Json& doc, int expected, const std::string& path) {
  const Json& p = member(doc, "periodicity", path);
  if (!p.is_number_integer() || p.get<long>() != expected)
    schema(path + ".periodicity", "expected " + std::to_string(expected));
}

void check_map_names(const Json& maps, std::initializer_list<const char*> allowed, const std::string& path) {
  if (!maps.is_object()) schema(path, "expected an object of map families");
  for (const auto& [key, _] : maps.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) schema(path, "unknown map family \"" + key + "\"");
  }
}

}  // namespace

GradedKOModule parse_module(const Json& doc, bool validate_relations) {
  const std::string path = "$";
  if (!doc.is_object()) schema(path, "expected an object");
  GradedKOModule m;
  m.name = doc.contains("name") ? expect_string(doc.at("name"), "$.name") : "module";
  check_periodicity(doc, 8, path);
  m.groups = parse_groups<8>(doc, path);
  const Json empty = Json::object();
  const Json& maps = doc.contains("maps") ? doc.at("maps") : empty;
  check_map_names(maps, {"eta", "x"}, "$.maps");
  m.eta = parse_family(maps, "eta", [&](int n) { return m.group(n); }, [&](int n) { return m.group(n + 1); }, "$.maps");
  m.x = parse_family(maps, "x", [&](int n) { return m.group(n); }, [&](int n) { return m.group(n + 4); }, "$.maps");
  if (doc.contains("unit") && !doc.at("unit").is_null()) {
    const Json& u = doc.at("unit");
    const Integer deg = parse_integer(member(u, "degree", "$.unit"), "$.unit.degree");
    if (deg != 0) schema("$.unit.degree", "the unit class lives in degree 0");
    const IntVector coords = parse_int_vector(member(u, "coords", "$.unit"), "$.unit.coords");
    if (coords.size() != m.groups[0].num_generators()) schema("$.unit.coords", "length does not match K_0");
    m.unit = GroupElement(m.groups[0], coords);
  }
  if (doc.contains("provenance") && !doc.at("provenance").is_object()) schema("$.provenance", "expected an object");
  if (validate_relations) require_valid(m);
  return m;
}

GradedKOModule parse_module_text(const std::string& text) { return parse_module(parse_json_text(text)); }

Json to_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row_vector(r)));
  return a;
}

namespace {

Json family_json(const std::array<AbHom, 8>& maps) {
  Json f = Json::object();
  for (int n = 0; n < 8; ++n)
    if (!maps[n].is_zero()) f[degree_key(n)] = to_json(maps[n].matrix());
  return f;
}

}  // namespace

Json serialize_module(const GradedKOModule& m) {
  Json doc;
  doc["name"] = m.name;
  doc["periodicity"] = 8;
  for (int n = 0; n < 8; ++n) doc["groups"][degree_key(n)] = to_json(m.groups[n].invariants());
  doc["maps"]["eta"] = family_json(m.eta);
  doc["maps"]["x"] = family_json(m.x);
  if (m.unit) doc["unit"] = {{"degree", 0}, {"coords", to_json(m.unit->coords())}};
  return doc;
}

ComplexificationData parse_complex(const Json& doc, const GradedKOModule& real) {
  const std::string path = "$";
  if (!doc.is_object()) schema(path, "expected an object");
  ComplexificationData d;
  d.real = real;
  d.complex.name = doc.contains("name") ? expect_string(doc.at("name"), "$.name") : real.name + "_C";
  check_periodicity(doc, 2, path);
  d.complex.groups = parse_groups<2>(doc, path);
  const Json& maps = member(doc, "maps", path);
  check_map_names(maps, {"c", "u"}, "$.maps");
  d.c = parse_family(maps, "c", [&](int n) { return real.group(n); }, [&](int n) { return d.complex.group(n); }, "$.maps");
  d.u = parse_family(maps, "u", [&](int n) { return d.complex.group(n); }, [&](int n) { return real.group(n); }, "$.maps");
  return d;
}

Json serialize_complex(const ComplexificationData& d) {
  Json doc;
  doc["name"] = d.complex.name;
  doc["periodicity"] = 2;
  for (int n = 0; n < 2; ++n) doc["groups"][degree_key(n)] = to_json(d.complex.groups[n].invariants());
  doc["maps"]["c"] = family_json(d.c);
  doc["maps"]["u"] = family_json(d.u);
  return doc;
}

ProductDatum parse_pairing(const Json& doc, const GradedKOModule& a, const GradedKOModule& b) {
  ProductDatum pd;
  pd.a = a;
  pd.b = b;
  const Json& prod = member(doc, "product", "$");
  try {
    pd.ab = parse_module(prod);
  } catch (const SchemaError& e) {
    std::string msg = e.what();
    if (msg.rfind("$", 0) == 0) msg = "$.product" + msg.substr(1);
    throw SchemaError(msg);
  }
  const Json& pairs = member(doc, "pairs", "$");
  if (!pairs.is_array()) schema("$.pairs", "expected an array");
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const std::string path = "$.pairs[" + std::to_string(k) + "]";
    const IntVector deg = parse_int_vector(member(pairs[k], "degrees", path), path + ".degrees");
    if (deg.size() != 2) schema(path + ".degrees", "expected [p, q]");
    const int p = wrap(static_cast<int>(deg[0].get_si()), 8), q = wrap(static_cast<int>(deg[1].get_si()), 8);
    if (pd.pairing.count({p, q})) schema(path + ".degrees", "degree pair given twice");
    const Json& table = member(pairs[k], "table", path);
    const std::size_t ns = a.group(p).num_generators(), nt = b.group(q).num_generators();
    const std::size_t nc = pd.ab.group(p + q).num_generators();
    if (!table.is_array() || table.size() != ns) schema(path + ".table", "expected " + std::to_string(ns) + " rows");
    std::vector<std::vector<IntVector>> t(ns);
    for (std::size_t s = 0; s < ns; ++s) {
      const std::string rp = path + ".table[" + std::to_string(s) + "]";
      if (!table[s].is_array() || table[s].size() != nt) schema(rp, "expected " + std::to_string(nt) + " entries");
      for (std::size_t j = 0; j < nt; ++j) {
        const std::string ep = rp + "[" + std::to_string(j) + "]";
        IntVector v = parse_int_vector(table[s][j], ep);
        if (v.size() != nc) schema(ep, "expected " + std::to_string(nc) + " coordinates");
        t[s].push_back(std::move(v));
      }
    }
    pd.pairing[{p, q}] = std::move(t);
  }
  return pd;
}

std::vector<AbHom> parse_sequence(const Json& doc) {
  const Json& groups = member(doc, "groups", "$");
  const Json& maps = member(doc, "maps", "$");
  if (!groups.is_array()) schema("$.groups", "expected an array");
  if (!maps.is_array()) schema("$.maps", "expected an array");
  if (groups.size() != maps.size() + 1) schema("$.maps", "expected one map fewer than groups");
  std::vector<FGAbGroup> gs;
  for (std::size_t i = 0; i < groups.size(); ++i) gs.push_back(parse_group(groups[i], "$.groups[" + std::to_string(i) + "]"));
  std::vector<AbHom> out;
  for (std::size_t i = 0; i < maps.size(); ++i) out.push_back(parse_hom(maps[i], gs[i], gs[i + 1], "$.maps[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace lcalc
