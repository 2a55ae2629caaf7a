#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "cli/dispatch.hpp"
#include "cli/json_io.hpp"

using namespace mukai;
using namespace mukai::cli;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::string kDegree2 = R"({"picard_rank": 1, "ns_gram": [[4]]})";
const std::string kDegree1 = R"({"picard_rank": 1, "ns_gram": [[2]]})";
const std::string kO = R"({"r": 1, "c": [0], "m": 1})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gy-gap row at d = 5") {
  const Result r = call({"gy-gap", "--d-min", "5", "--d-max", "5"});
  CHECK(r.code == kOk);
  CHECK(r.out ==
        "d,log_d_plus_2,rho,log_rho,gap\n"
        "5,1.94591014906,2.61803398875,0.962423650119,0.983486498936\n");
}

TEST_CASE("gy-gap sweep is ordered by d and json is parseable") {
  const Result r = call({"gy-gap", "--d-min", "1", "--d-max", "300"});
  CHECK(r.code == kOk);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  long expect = 1;
  while (std::getline(lines, line)) CHECK(std::stol(line.substr(0, line.find(','))) == expect++);
  CHECK(expect == 301);

  const Result j = call({"gy-gap", "--d-min", "4", "--d-max", "6", "--format", "json"});
  CHECK(j.code == kOk);
  const json arr = json::parse(j.out);
  REQUIRE(arr.size() == 3);
  CHECK(arr[0]["rho"] == "1");
  CHECK(arr[1]["rho"] == "3/2+1/2*sqrt(5)");
  CHECK(arr[2]["certified"] == true);
}

TEST_CASE("phi-h") {
  const Result r = call({"phi-h", "--d", "3"});
  CHECK(r.code == kOk);
  const json j = json::parse(r.out);
  CHECK(matrix_from_json(j) == IntMatrix{{-3, 6, -1}, {-1, 1, 0}, {-1, 0, 0}});
  CHECK(j["picard_rank"] == 1);

  const Result full = call({"phi-h", "--full", "--lattice", R"({"picard_rank": 2, "ns_gram": [[4,0],[0,-4]]})"});
  CHECK(full.code == kOk);
  const IntMatrix m = matrix_from_json(json::parse(full.out));
  CHECK(m.rows() == 4);
  CHECK(call({"phi-h", "--full"}).code == kInputViolation);
  CHECK(call({"phi-h", "--d", "0"}).code == kInputViolation);
  CHECK(call({"phi-h", "--d", "3", "--lattice", kDegree2}).code == kInputViolation);
}

TEST_CASE("entropy-curve") {
  const Result r = call({"entropy-curve", "--spherical-dim", "2", "--complement", "yes", "--t-min", "-1",
                         "--t-max", "1", "--step", "1"});
  CHECK(r.code == kOk);
  CHECK(r.out == "t,h_t,proven\n-1,1,proven\n0,0,proven\n1,0,proven\n");

  const Result u = call({"entropy-curve", "--spherical-dim", "3", "--complement", "unknown", "--t-min",
                         "-1/2", "--t-max", "1/2", "--step", "1/2"});
  CHECK(u.out == "t,h_t,proven\n-1/2,1,proven\n0,0,proven\n1/2,0,unproven\n");

  CHECK(call({"entropy-curve", "--spherical-dim", "2", "--complement", "maybe"}).code == kInputViolation);
  CHECK(call({"entropy-curve", "--spherical-dim", "0"}).code == kInputViolation);
  CHECK(call({"entropy-curve", "--spherical-dim", "2", "--step", "0"}).code == kInputViolation);
}

TEST_CASE("ext-recursion") {
  const Result r = call({"ext-recursion", "--d", "2", "--i", "1", "--k", "1", "--n-max", "3"});
  CHECK(r.code == kOk);
  CHECK(r.out == "n,top_dim,paper_bound,chi\n0,10,1,10\n1,40,4,-20\n2,160,16,14\n3,640,64,-4\n");
  CHECK(call({"ext-recursion", "--d", "2", "--i", "0"}).code == kInputViolation);
}

TEST_CASE("pair, twist, lattice-check") {
  const Result p = call({"pair", "--lattice", kDegree2, "--v", kO, "--w", R"({"r":1,"c":[-1],"m":3})"});
  CHECK(p.code == kOk);
  const json j = json::parse(p.out);
  CHECK(j["euler_pairing"] == 4);
  CHECK(j["mukai_pairing"] == -4);

  const Result t = call({"twist", "--lattice", kDegree2, "--s", kO});
  CHECK(t.code == kOk);
  const IntMatrix m = matrix_from_json(json::parse(t.out));
  CHECK(m * m == IntMatrix::identity(3));
  CHECK(call({"twist", "--lattice", kDegree2, "--s", R"({"r":0,"c":[1],"m":0})"}).code == kInputViolation);

  const Result l = call({"lattice-check", kDegree2});
  CHECK(l.code == kOk);
  CHECK(json::parse(l.out)["mukai_signature"] == json({2, 1, 0}));
  CHECK(call({"lattice-check", R"({"picard_rank": 1, "ns_gram": [[3]]})"}).code == kInputViolation);
  CHECK(call({"lattice-check", R"({"picard_rank": 2, "ns_gram": [[4]]})"}).code == kInputViolation);
  CHECK(call({"lattice-check", "/nonexistent/file.json"}).code == kInputViolation);
  CHECK(call({"lattice-check", "{not json"}).code == kInputViolation);
}

TEST_CASE("char-poly and spectral-radius") {
  const std::string phi5 = "[[-5,10,-1],[-1,1,0],[-1,0,0]]";
  const Result c = call({"char-poly", "--matrix", phi5});
  CHECK(c.code == kOk);
  CHECK(json::parse(c.out)["coeffs"] == json({1, 4, 4, 1}));

  const Result s = call({"spectral-radius", "--matrix", phi5});
  CHECK(s.code == kOk);
  const CertifiedRadius r = radius_from_json(json::parse(s.out));
  CHECK(r.value == doctest::Approx(2.61803398875).epsilon(1e-12));
  CHECK(Rational(r.hi - r.lo).get_d() <= 1e-9);
  CHECK(call({"spectral-radius", "--matrix", "[[1,2,3]]"}).code == kInputViolation);
  CHECK(call({"spectral-radius", "--matrix", phi5, "--tol", "-1"}).code == kInputViolation);
}

TEST_CASE("complement-search and exit code 4") {
  const Result a = call({"complement-search", "--lattice", kDegree2, "--s", kO, "--bound", "3"});
  CHECK(a.code == kOk);
  const SearchReport rep = search_report_from_json(json::parse(a.out));
  CHECK(rep.v == MukaiVector{Integer(0), {Integer(1)}, Integer(0)});
  CHECK(rep.v_squared == 4);
  CHECK(rep.twice_square == 8);
  CHECK_FALSE(rep.is_square);

  const Result b = call({"complement-search", "--lattice", kDegree1, "--s", kO});
  CHECK(b.code == kOk);
  CHECK(search_report_from_json(json::parse(b.out)).v == MukaiVector{Integer(1), {Integer(1)}, Integer(-1)});

  CHECK(call({"complement-search", "--lattice", kDegree1, "--s", kO, "--bound", "0"}).code == kInputViolation);

  const std::string steep = R"({"picard_rank": 3, "ns_gram": [[-196, 77, -36], [77, -80, 104], [-36, 104, -2]]})";
  const std::string s3 = R"({"r": -3, "c": [0, 0, -1], "m": 0})";
  const Result exhausted = call({"complement-search", "--lattice", steep, "--s", s3, "--bound", "1"});
  CHECK(exhausted.code == kSearchExhausted);
  CHECK(exhausted.err.find("search bound 1") != std::string::npos);
  CHECK(call({"complement-search", "--lattice", steep, "--s", s3, "--bound", "6"}).code == kOk);
  CHECK(call({"complement-search", "--lattice", kDegree2, "--s", R"({"r":1,"c":[0],"m":-1})"}).code ==
        kInputViolation);
}

TEST_CASE("usage and parse errors") {
  const Result none = call({});
  CHECK(none.code == kInputViolation);
  CHECK_FALSE(none.err.empty());
  CHECK(call({"frobnicate"}).code == kInputViolation);
  CHECK(call({"gy-gap", "--d-min", "x", "--d-max", "2"}).code == kInputViolation);
  CHECK(call({"gy-gap", "--d-min", "3", "--d-max", "2"}).code == kInputViolation);
  const Result help = call({"--help"});
  CHECK(help.code == kOk);
  CHECK(help.out.find("gy-gap") != std::string::npos);
  CHECK(call({"pair", "--lattice", kDegree2, "--v", kO, "--w", kO, "--format", "csv"}).code == kInputViolation);
}

TEST_CASE("JSON round trips") {
  const K3LatticeModel model(IntMatrix{{4, 1}, {1, -2}});
  CHECK(model_from_json(model_to_json(model)) == model);
  const MukaiVector v{Integer(3), {Integer(-2), Integer(5)}, Integer(7)};
  CHECK(vector_from_json(vector_to_json(v)) == v);
  const MukaiVector big{Integer("123456789012345678901234567890"), {Integer(1), Integer(0)}, Integer(-1)};
  CHECK(vector_from_json(json::parse(vector_to_json(big).dump())) == big);
  const IntMatrix m{{1, -2}, {3, 4}};
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK(matrix_from_json(isometry_to_json(Isometry::identity(model))) == IntMatrix::identity(4));
  const CharPoly p = char_poly(m);
  CHECK(char_poly_from_json(json::parse(char_poly_to_json(p).dump())) == p);
  const CertifiedRadius r = spectral_radius(IntMatrix{{-5, 10, -1}, {-1, 1, 0}, {-1, 0, 0}});
  const CertifiedRadius back = radius_from_json(json::parse(radius_to_json(r).dump()));
  CHECK(back.lo == r.lo);
  CHECK(back.hi == r.hi);
  const SearchReport rep = make_search_report(K3LatticeModel::of_degree(2), MukaiVector{Integer(0), {Integer(1)}, Integer(0)});
  const SearchReport rep2 = search_report_from_json(json::parse(search_report_to_json(rep).dump()));
  CHECK(rep2.v == rep.v);
  CHECK(rep2.v_squared == rep.v_squared);
  CHECK(rep2.is_square == rep.is_square);
  CHECK(rational_from_string("-3/6") == make_rational(-1, 2));
  CHECK(rational_from_string("0.25") == make_rational(1, 4));
  CHECK(rational_from_string("-1.5") == make_rational(-3, 2));

  // emitted JSON is accepted by the matching reader
  const Result ph = call({"phi-h", "--full", "--lattice", model_to_json(model).dump()});
  REQUIRE(ph.code == kOk);
  CHECK(matrix_from_json(json::parse(ph.out)).rows() == 4);
  const Result lc = call({"lattice-check", model_to_json(model).dump()});
  CHECK(model_from_json(json::parse(lc.out)) == model);
}

TEST_CASE("determinism") {
  const std::vector<std::vector<std::string>> commands{
      {"gy-gap", "--d-min", "1", "--d-max", "200"},
      {"spectral-radius", "--matrix", "[[-7,14,-1],[-1,1,0],[-1,0,0]]"},
      {"entropy-curve", "--spherical-dim", "4", "--complement", "no", "--t-min", "-3", "--t-max", "3", "--step", "1/3"},
      {"ext-recursion", "--d", "7", "--n-max", "40"},
      {"complement-search", "--lattice", R"({"picard_rank": 2, "ns_gram": [[4,1],[1,-2]]})", "--s",
       R"({"r":1,"c":[0,0],"m":1})"},
  };
  for (const auto& cmd : commands) {
    const Result a = call(cmd);
    const Result b = call(cmd);
    CHECK(a.code == kOk);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("MUKAI_ENTROPY_TOL overrides the default tolerance") {
  const std::vector<std::string> cmd{"spectral-radius", "--matrix", "[[-5,10,-1],[-1,1,0],[-1,0,0]]"};
  ::setenv("MUKAI_ENTROPY_TOL", "1e-3", 1);
  const Result coarse = call(cmd);
  ::setenv("MUKAI_ENTROPY_TOL", "nonsense", 1);
  const Result bad = call(cmd);
  ::unsetenv("MUKAI_ENTROPY_TOL");
  const Result fine = call(cmd);
  REQUIRE(coarse.code == kOk);
  const CertifiedRadius rc = radius_from_json(json::parse(coarse.out));
  const CertifiedRadius rf = radius_from_json(json::parse(fine.out));
  CHECK(Rational(rc.hi - rc.lo).get_d() <= 1e-3);
  CHECK(Rational(rf.hi - rf.lo).get_d() <= 1e-9);
  CHECK(default_tolerance() == 1e-9);
  CHECK(bad.code == kInputViolation);
}

}  // TEST_SUITE
