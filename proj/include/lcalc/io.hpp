#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lcalc/ltheory.hpp"

namespace lcalc {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become SchemaError at "$".
Json parse_json_text(const std::string& text, const std::string& what = "document");
Json read_json_file(const std::string& path);

/// Module document: name, periodicity 8, groups "0".."7" -> invariant list,
/// maps {"eta", "x"} as degree -> rows, optional unit {degree: 0, coords}.
/// Validates the result (RelationError on failure) unless validate_relations is false.
GradedKOModule parse_module(const Json& doc, bool validate_relations = true);
GradedKOModule parse_module_text(const std::string& text);
Json serialize_module(const GradedKOModule& m);

/// Periodicity-2 document with maps "c" (K_n(A) -> K_n(A_C)) and "u" (back), degrees "0".."7".
ComplexificationData parse_complex(const Json& doc, const GradedKOModule& real);
Json serialize_complex(const ComplexificationData& d);

/// {"product": module document, "pairs": [{"degrees": [p, q], "table": [[coords]]}]}
ProductDatum parse_pairing(const Json& doc, const GradedKOModule& a, const GradedKOModule& b);

/// {"groups": [invariant lists], "maps": [matrices]}, map i going groups[i] -> groups[i+1].
std::vector<AbHom> parse_sequence(const Json& doc);

/// Invariant list at `path`; rejects 1, negatives and non-canonical order.
FGAbGroup parse_group(const Json& node, const std::string& path);
IntMatrix parse_matrix(const Json& node, std::size_t rows, std::size_t cols, const std::string& path);
IntVector parse_int_vector(const Json& node, const std::string& path);
Integer parse_integer(const Json& node, const std::string& path);

Json to_json(const Integer& n);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);

}  // namespace lcalc
