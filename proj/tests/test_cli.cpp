#include <doctest.h>

#include <sstream>

#include "gradus/cli.hpp"
#include "gradus/errors.hpp"
#include "gradus/module_file.hpp"
#include "support.hpp"

using namespace gradus;
using namespace gradus::testing;

namespace {

std::string path(const std::string& name) { return std::string(GRADUS_FIXTURE_DIR) + "/" + name; }

cli::CommandResult run(std::string verb, const std::string& module, std::string statement = {}) {
  cli::CommandConfig cfg;
  cfg.verb = std::move(verb);
  cfg.statement = std::move(statement);
  cfg.module_path = path(module);
  return cli::run(cfg);
}

int main_of(std::vector<std::string> args, std::string& out) {
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream o;
  std::ostringstream e;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), o, e);
  out = o.str() + e.str();
  return code;
}

}  // namespace

TEST_CASE("parse_module_file") {
  const auto r = parse_module_file("prime 32003; vars x y; gens 0; rels;");
  CHECK(r == PresentedModule::free(ring(2), {0}));
  const auto q = parse_module_file("prime 32003; vars x y; gens 0; rels x^2, x*y;");
  CHECK(hilbert_function(q, 0, 4) == std::vector<std::size_t>{1, 2, 1, 1, 1});
  const auto sum = parse_module_file("prime 32003; vars x y; gens 0 1; rels;");
  CHECK(sum.twists() == std::vector<int>{0, 1});
  CHECK(sum.relations().empty());
  const auto vec = parse_module_file("vars x y;\ngens 0 1;\nrels [x*y, -x];  # degree 2 column\n");
  REQUIRE(vec.relations().size() == 1);
  CHECK(vec.relations()[0].degree == 2);
}

TEST_CASE("parse errors carry locations") {
  try {
    parse_module_file("vars x y;\ngens 0;\nrels x y;");
    FAIL("implicit multiplication accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 8);
  }
  CHECK_THROWS_AS(parse_module_file("prime 32001; vars x; gens 0; rels;"), ParseError);
  CHECK_THROWS_AS(parse_module_file("vars x y; gens 0; rels x^2 + y;"), ParseError);
  CHECK_THROWS_AS(parse_module_file("vars x x; gens 0; rels;"), ParseError);
  CHECK_THROWS_AS(parse_module_file("vars x y; gens 0; rels x"), ParseError);
  CHECK_THROWS_AS(parse_module_file("vars x y; gens 0; rels z;"), ParseError);
  CHECK_THROWS_AS(parse_module_file("vars x y; gens 0 0; rels [x];"), ParseError);
}

TEST_CASE("print and parse round trip") {
  for (const char* name : {"R1.mod", "R2.mod", "R3.mod", "k.mod", "xy.mod", "noncm.mod", "conic.mod", "principal.mod",
                           "twisted_sum.mod"}) {
    INFO(name);
    const auto m = fixture(name);
    CHECK(parse_module_file(print_module_file(m)) == m);
  }
  const auto v = parse_module_file("vars x y; gens 0 1; rels [x*y, -x], [x^2, 3*x];");
  CHECK(parse_module_file(print_module_file(v)) == v);
}

TEST_CASE("sequences") {
  const RingSpec r2 = ring(2);
  CHECK(parse_sequence(r2, "").empty());
  CHECK(parse_sequence(r2, "x, y").size() == 2);
  CHECK(parse_sequence(r2, "x^2 - 2*x*y, (x+y)^2")[1] == poly(r2, "x^2 + 2*x*y + y^2"));
}

TEST_CASE("windows") {
  CHECK(cli::parse_window("-3..4") == std::make_pair(-3, 4));
  CHECK_THROWS_AS(cli::parse_window("4..3"), InputError);
  CHECK_THROWS_AS(cli::parse_window("1-3"), InputError);
  CHECK_THROWS_AS(cli::parse_window("a..3"), InputError);
}

TEST_CASE("computing verbs") {
  auto dim = run("dim", "noncm.mod");
  CHECK(dim.exit_code == 0);
  CHECK(dim.output == "1\n");
  CHECK(run("depth", "noncm.mod").output == "0\n");
  CHECK(run("cm", "xy.mod").output == "true\n");
  CHECK(run("sop", "R2.mod").output == "x, y\n");
  CHECK(run("width", "R2.mod").output == "2\n");
  CHECK(run("ndim", "R2.mod").output == "2\n");
  CHECK(run("cocm", "noncm.mod").output == "false\n");
  cli::CommandConfig h;
  h.verb = "hilbert";
  h.module_path = path("noncm.mod");
  h.window = std::make_pair(0, 3);
  CHECK(cli::run(h).output == "0 1\n1 2\n2 1\n3 1\n");
  cli::CommandConfig lc;
  lc.verb = "lc";
  lc.module_path = path("R2.mod");
  lc.window = std::make_pair(-4, 0);
  lc.format = Format::kJson;
  const auto res = cli::run(lc);
  CHECK(res.exit_code == 0);
  const Json j = Json::parse(res.output);
  CHECK(j["schema"] == 1);
  CHECK(j["result"]["modules"][2]["dims"] == Json::array({3, 2, 1, 0, 0}));
}

TEST_CASE("verify verbs") {
  std::string out;
  CHECK(main_of({"gradus", "verify", "thm31", "--module", path("R2.mod"), "--sop", "x,y", "--levels", "4",
                 "--format", "json"},
                out) == 0);
  const Json j = Json::parse(out);
  const Json& report = j["reports"][0];
  CHECK(report["verdict"] == "verified");
  std::vector<long long> dims;
  for (const auto& t : report["tables"])
    if (t["name"] == "inverse systems")
      for (const auto& row : t["rows"]) dims.push_back(row[2].get<long long>());
  CHECK(dims == std::vector<long long>{1, 4, 9, 16});

  CHECK(main_of({"gradus", "verify", "prop24", "--module", path("R2.mod"), "--ideal", "x,y"}, out) == 0);
  CHECK(main_of({"gradus", "verify", "cor22", "--module", path("noncm.mod"), "--sop", "y"}, out) == 3);
  CHECK(main_of({"gradus", "dim", "--module", path("noncm.mod")}, out) == 0);
  CHECK(out == "1\n");
}

TEST_CASE("usage errors exit 1") {
  std::string out;
  CHECK(main_of({"gradus", "frobnicate", "--module", path("R2.mod")}, out) == 1);
  CHECK(main_of({"gradus", "dim"}, out) == 1);
  CHECK(main_of({"gradus", "verify", "--module", path("R2.mod")}, out) == 1);
  CHECK(main_of({"gradus", "verify", "thm99", "--module", path("R2.mod")}, out) == 1);
  CHECK(main_of({"gradus", "dim", "--module", "/nonexistent.mod"}, out) == 1);
  CHECK(main_of({"gradus", "lc", "--module", path("R2.mod"), "--window", "5..1"}, out) == 1);
  CHECK(main_of({"gradus", "dim", "--module", path("R2.mod"), "--format", "xml"}, out) == 1);
  CHECK(run("depth", "k.mod").exit_code == 0);
}
