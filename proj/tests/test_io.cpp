#include <doctest.h>

#include <random>

#include "lcalc/io.hpp"
#include "oracle/fixtures.hpp"
#include "oracle/random_module.hpp"

using namespace lcalc;

namespace {

const std::string kModules = std::string(LCALC_SOURCE_DATA_DIR) + "/modules/";
const std::string kTestData = LCALC_TEST_DATA_DIR;

std::string schema_message(const std::string& text) {
  try {
    parse_module_text(text);
  } catch (const SchemaError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("shipped documents match hand-entered data") {
  const auto ko = parse_module(read_json_file(kModules + "ko.json"));
  CHECK(ko.same_data(fixtures::ko()));
  const auto reals = parse_complex(read_json_file(kModules + "ko.complex.json"), ko);
  const auto ref = fixtures::reals();
  CHECK(reals.complex.groups == ref.complex.groups);
  CHECK(reals.c == ref.c);
  CHECK(reals.u == ref.u);

  const auto c = parse_module(read_json_file(kModules + "ku_real.json"));
  CHECK(c.same_data(fixtures::ku_as_real()));
  const auto cc = parse_complex(read_json_file(kModules + "ku_real.complex.json"), c);
  CHECK(cc.c == fixtures::complexes().c);
  CHECK(cc.u == fixtures::complexes().u);

  const auto o3 = parse_module(read_json_file(kModules + "o3_complex.json"));
  CHECK(o3.same_data(fixtures::cuntz3_complex().real));

  const auto h = parse_module(read_json_file(kTestData + "/quaternions.json"));
  CHECK(h.same_data(fixtures::quaternions().real));
}

TEST_CASE("round trip") {
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto m = oracle::random_module(rng);
    const auto back = parse_module(parse_json_text(serialize_module(m).dump()));
    CHECK(back.same_data(m));
  }
  const auto d = fixtures::complexes();
  const auto back = parse_complex(parse_json_text(serialize_complex(d).dump()), d.real);
  CHECK(back.c == d.c);
  CHECK(back.u == d.u);
  CHECK(back.complex.groups == d.complex.groups);
  // large integers survive as strings
  auto big = GradedKOModule::with_zero_maps("big", {FGAbGroup::cyclic(Integer("100000000000000000000")), {}, {}, {}, {}, {}, {}, {}});
  CHECK(parse_module(parse_json_text(serialize_module(big).dump()), false).same_data(big));
}

TEST_CASE("schema errors carry paths") {
  CHECK(schema_message(R"({"periodicity": 8, "groups": {"0": [1], "1": [], "2": [], "3": [], "4": [], "5": [], "6": [], "7": []}})")
            .rfind("$.groups.0[0]", 0) == 0);
  CHECK(schema_message(R"({"periodicity": 8, "groups": {"0": [], "1": [], "2": [], "3": [], "4": [], "5": [], "6": []}})")
            .find("missing key \"7\"") != std::string::npos);
  CHECK(schema_message(R"({"periodicity": 2, "groups": {}})").rfind("$.periodicity", 0) == 0);
  CHECK(schema_message(R"({"periodicity": 8, "groups": {"0": [], "1": [], "2": [], "3": [], "4": [], "5": [], "6": [], "7": [], "8": []}})")
            .rfind("$.groups", 0) == 0);
  CHECK(schema_message(R"({"periodicity": 8, "groups": {"0": [0], "1": [2], "2": [], "3": [], "4": [], "5": [], "6": [], "7": []},
                           "maps": {"eta": {"0": [[1, 0]]}}})")
            .rfind("$.maps.eta.0[0]", 0) == 0);
  CHECK(schema_message(R"({"periodicity": 8, "groups": {"0": [4, 2], "1": [], "2": [], "3": [], "4": [], "5": [], "6": [], "7": []}})")
            .rfind("$.groups.0", 0) == 0);
  CHECK(schema_message(R"({"periodicity": 8, "groups": {"0": [0], "1": [], "2": [], "3": [], "4": [], "5": [], "6": [], "7": []},
                           "maps": {"beta": {}}})")
            .rfind("$.maps", 0) == 0);
  CHECK(schema_message(R"({"periodicity": 8, "groups": {"0": [0], "1": [], "2": [], "3": [], "4": [], "5": [], "6": [], "7": []},
                           "unit": {"degree": 1, "coords": [1]}})")
            .rfind("$.unit.degree", 0) == 0);
  CHECK(schema_message("{").rfind("$", 0) == 0);
  // a matrix that is not a homomorphism
  CHECK(schema_message(R"({"periodicity": 8, "groups": {"0": [2], "1": [0], "2": [], "3": [], "4": [], "5": [], "6": [], "7": []},
                           "maps": {"eta": {"0": [[1]]}}})")
            .rfind("$.maps.eta.0", 0) == 0);
}

TEST_CASE("relation errors name the relation") {
  try {
    parse_module(read_json_file(kTestData + "/bad_x_squared.json"));
    FAIL("expected a relation error");
  } catch (const RelationError& e) {
    CHECK(e.relation() == "x² = 4β_ℝ");
    CHECK(e.degree() == 0);
  }
  CHECK_THROWS_AS(parse_module(read_json_file(kTestData + "/bad_invariant.json")), SchemaError);
}

TEST_CASE("sequence documents") {
  CHECK(check_exact(parse_sequence(read_json_file(kTestData + "/exact.json"))).exact);
  CHECK_FALSE(check_exact(parse_sequence(read_json_file(kTestData + "/not_exact.json"))).exact);
  CHECK_THROWS_AS(parse_sequence(parse_json_text(R"({"groups": [[0]], "maps": [[[1]]]})")), SchemaError);
}

TEST_CASE("pairing documents") {
  const auto h = fixtures::quaternions().real;
  const auto pd = parse_pairing(read_json_file(kTestData + "/hh_pairing.json"), h, h);
  const auto ref = fixtures::quaternion_pairing();
  CHECK(pd.pairing == ref.pairing);
  CHECK(pd.ab.same_data(ref.ab));
  CHECK(validate_pairing(pd).valid());
  CHECK_THROWS_AS(parse_pairing(parse_json_text(R"({"product": {}, "pairs": []})"), h, h), SchemaError);
}
