#include <doctest.h>

#include <sstream>

#include "lcalc/cli.hpp"

using lcalc::run_cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kTestData = std::string(LCALC_TEST_DATA_DIR) + "/";
const std::string kModules = std::string(LCALC_SOURCE_DATA_DIR) + "/modules/";

}  // namespace

TEST_CASE("genus") {
  const auto r = run({"genus", "--series", "trivial", "--order", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "0: 1\n1: 0\n2: 0\n3: 0\n4: 0\n");
  const auto las = run({"genus", "--series", "las", "--order", "4"});
  CHECK(las.out == "0: 1\n1: 0\n2: 1/12\n3: 0\n4: -1/720\n");
  CHECK(run({"genus", "--series", "todd", "--order", "4"}).code == 2);
}

TEST_CASE("fgl-iso") {
  const auto r = run({"fgl-iso", "--k", "2", "--order", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == "1: 1\n2: 1\n3: 0\n4: 0\n5: 0\n6: 0\n7: 0\n8: 0\nintegral: yes\n");
}

TEST_CASE("ahr") {
  const auto r = run({"ahr", "--c", "3", "--kmax", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "k v2 nonzero\n1 3 yes\n2 5 yes\n3 7 yes\nstrictly increasing: yes\nobstructed: yes\n");
  CHECK(run({"ahr", "--c", "4", "--kmax", "3"}).code == 2);
}

TEST_CASE("lgroups") {
  const auto r = run({"lgroups", kTestData + "quaternions.json"});
  CHECK(r.code == 0);
  CHECK(r.out == "L_0: [0]  Z\nL_1: []  0\nL_2: [2]  Z/2\nL_3: []  0\n");
  const auto f = run({"lgroups", kModules + "o3_complex.json", "--free", "--complex", kModules + "o3_complex.complex.json"});
  CHECK(f.code == 0);
  CHECK(f.out.find("L^h_2: [2]  Z/2") != std::string::npos);
  CHECK(f.out.find("wood: exact") != std::string::npos);

  const auto bad = run({"lgroups", kTestData + "bad_invariant.json"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("$.groups.1[0]") != std::string::npos);
  const auto rel = run({"lgroups", kTestData + "bad_x_squared.json"});
  CHECK(rel.code == 2);
  CHECK(rel.err.find("x² = 4β_ℝ") != std::string::npos);
  CHECK(run({"lgroups", kTestData + "bad_shape.json"}).code == 2);
  CHECK(run({"lgroups", kTestData + "bad_syntax.json"}).code == 2);
  CHECK(run({"lgroups", kTestData + "missing.json"}).code == 2);
  const auto nounit = run({"lgroups", kTestData + "exact.json"});
  CHECK(nounit.code == 2);
}

TEST_CASE("tau") {
  const auto r = run({"tau", kModules + "ko.json", "--degree", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("matrix: [[8]]") != std::string::npos);
  CHECK(run({"tau", kModules + "ko.json", "--degree", "8"}).out.find("matrix: [[16]]") != std::string::npos);
}

TEST_CASE("product") {
  const std::string h = kTestData + "quaternions.json";
  const auto r = run({"product", h, h, kTestData + "hh_pairing.json", "--i", "0", "--j", "0", "--a", "1", "--b", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "L_0: Z\nproduct: [4]\n");
  CHECK(run({"product", h, h, kTestData + "hh_pairing.json", "--i", "0", "--j", "0", "--a", "1,2", "--b", "1"}).code == 2);
}

TEST_CASE("check-exact") {
  CHECK(run({"check-exact", kTestData + "exact.json"}).out == "exact\n");
  CHECK(run({"check-exact", kTestData + "exact.json"}).code == 0);
  const auto r = run({"check-exact", kTestData + "not_exact.json"});
  CHECK(r.code == 1);
  CHECK(r.out.find("not exact") != std::string::npos);
}

TEST_CASE("verify-catalog") {
  const auto h = run({"verify-catalog", "H"});
  CHECK(h.code == 0);
  CHECK(h.out.find("(Z, 0, Z/2, 0)") != std::string::npos);
  const auto all = run({"verify-catalog"});
  CHECK(all.code == 0);
  CHECK(all.out == run({"verify-catalog"}).out);
  CHECK(run({"verify-catalog", "F_n", "--param", "n=5"}).out.find("Z^5") != std::string::npos);
  CHECK(run({"verify-catalog", "nonsense"}).code == 2);
  CHECK(run({"verify-catalog", "F_n", "--param", "n=0"}).code == 2);
  CHECK(run({"verify-catalog", "F_n", "--param", "n"}).code == 2);
  CHECK(run({"verify-catalog", "H", "--json"}).out.find("\"status\": \"pass\"") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"genus", "--series", "las", "--order", "4", "--bogus"}).code == 2);
  CHECK(run({"tau", kModules + "ko.json"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
