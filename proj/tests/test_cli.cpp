#include "doctest.h"
#include "ramcov/cli.hpp"
#include "ramcov/io.hpp"
#include "ramcov/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ramcov;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out, err;
  Report report() const { return Report::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("ramcov-cli-" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string file(const std::string& name, const std::string& text) const {
    const auto path = dir / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("euler and covering on builtins") {
  const auto euler = run({"euler", "builtin:diamond-cover4"});
  CHECK(euler.status == 0);
  const auto report = euler.report();
  CHECK(report.verdict == Verdict::pass);
  CHECK(report.payload["chi"] == "-4/1");
  CHECK_FALSE(contains_numbers(report.to_json()));

  const auto covering = run({"covering", "builtin:P-diamond4"});
  CHECK(covering.status == 0);
  const auto payload = covering.report().payload;
  CHECK(payload["degree"] == "4");
  CHECK(payload["total_ramification"] == "4");
  CHECK(payload["ramification"]["x1"] == "2");
  CHECK(payload["ramification"]["x2"] == "2");
  CHECK(payload["ramification"]["y1"] == "2");
  CHECK(payload["ramification"]["y3"] == "2");
  CHECK(payload["ramification"]["z1"] == "1");

  CHECK(run({"covering", "--unramified", "builtin:P-diamond4"}).status == 1);
}

TEST_CASE("every theorem command passes on the builtin coverings") {
  for (const auto& functor : {"builtin:P-diamond4", "builtin:P-wedge2"})
    for (const auto& command : {"rh", "zetadiv", "dinverse", "lemmas", "covering"}) {
      const auto r = run({command, functor});
      CHECK_MESSAGE(r.status == 0, command << " " << functor << ": " << r.out << r.err);
      CHECK_FALSE(contains_numbers(Report::parse(r.out).to_json()));
    }
}

TEST_CASE("input errors exit with status 2") {
  Scratch scratch;
  const auto missing = scratch.file(
      "missing.json",
      R"({"objects":["x","y","z"],"morphisms":[{"id":"f","src":"x","tgt":"y"},{"id":"g","src":"y","tgt":"z"}]})");
  const auto r = run({"validate", missing});
  CHECK(r.status == 2);
  const auto report = r.report();
  CHECK(report.verdict == Verdict::fail);
  REQUIRE_FALSE(report.diagnostics.empty());
  CHECK(report.diagnostics.front().find("(f,g)") != std::string::npos);

  CHECK(run({"validate", scratch.path("absent.json")}).status == 2);
  CHECK(run({"validate", scratch.file("garbage.json", "{not json")}).status == 2);
  CHECK(run({"validate", "builtin:nope"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"zeta", "builtin:diamond", "--order", "0"}).status == 2);
  CHECK(run({"chains", "builtin:diamond", "--n", "1", "--base", "q"}).status == 2);
  CHECK(run({"wedge", "builtin:arrow:y", "builtin:arrow:x", "-o", scratch.path("w.json")}).status == 2);
}

TEST_CASE("a non-covering exits with status 1") {
  Scratch scratch;
  const auto path = scratch.file("collapse.json", R"({
    "source": "builtin:arrow",
    "target": "builtin:terminal",
    "object_map": {"x": "pt", "y": "pt"},
    "morphism_map": {"f": "id:pt"}
  })");
  for (const auto& command : {"covering", "rh", "zetadiv", "dinverse", "lemmas"}) {
    const auto r = run({command, path});
    CHECK_MESSAGE(r.status == 1, command << ": " << r.out << r.err);
    CHECK(r.report().verdict == Verdict::fail);
    CHECK_FALSE(r.report().payload.contains("identity_holds"));
  }
}

TEST_CASE("chains, zeta and validate payloads") {
  const auto chains = run({"chains", "builtin:diamond", "--n", "1", "--nondegenerate", "--list"});
  CHECK(chains.status == 0);
  const auto payload = chains.report().payload;
  CHECK(payload["count"] == "4");
  CHECK(payload["chains"].size() == 4);
  CHECK(payload["chains"][0] == "(xw)");
  CHECK(run({"chains", "builtin:diamond", "--n", "3"}).report().payload["count"] == "16");
  const auto zeta = run({"zeta", "builtin:diamond", "--order", "3"}).report().payload;
  CHECK(zeta["coefficients"] == io::Json::parse(R"(["1/1","8/1","38/1","416/3"])"));
  const auto validate = run({"validate", "builtin:diamond"}).report().payload;
  CHECK(validate["objects"] == "4");
  CHECK(validate["preinitial"] == io::Json::parse(R"(["x","y"])"));
}

TEST_CASE("euler reports undefined at a pole") {
  const auto r = run({"euler", std::string(RAMCOV_TEST_DATA) + "/no_series_euler.json"});
  CHECK(r.status == 0);
  CHECK(r.report().verdict == Verdict::undefined);
  CHECK(r.report().payload["chi"] == "undefined");
}

TEST_CASE("example, wedge and random write files the other commands accept") {
  Scratch scratch;
  CHECK(run({"example", "arrow", "-o", scratch.path("arrow.json")}).status == 0);
  CHECK(run({"example", "P-wedge2", "-o", scratch.path("pw.json")}).status == 0);
  CHECK(run({"example", "nope", "-o", scratch.path("x.json")}).status == 2);
  CHECK(run({"rh", scratch.path("pw.json")}).status == 0);
  const auto wedge = run({"wedge", scratch.path("arrow.json") + ":x", "builtin:arrow:x", "-o", scratch.path("w.json")});
  CHECK(wedge.status == 0);
  const auto euler = run({"euler", scratch.path("w.json")});
  CHECK(euler.report().payload["chi"] == "1/1");
  CHECK(run({"random", "--seed", "3", "-o", scratch.path("r1.json")}).status == 0);
  CHECK(run({"random", "--seed", "3", "-o", scratch.path("r2.json")}).status == 0);
  CHECK(slurp(scratch.path("r1.json")) == slurp(scratch.path("r2.json")));
  CHECK(run({"rh", scratch.path("r1.json")}).status == 0);
}

TEST_CASE("reports are deterministic and round-trip") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"zetadiv", "builtin:P-diamond4"},
                                                                {"--pretty", "dinverse", "builtin:P-wedge2"},
                                                                {"selftest", "--cases", "5"}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.out == b.out);
    CHECK(Report::parse(a.out).serialize(args.front() == "--pretty") == a.out);
  }
  CHECK_THROWS_AS(parse_verdict("maybe"), io::InputError);
  CHECK(parse_verdict(to_string(Verdict::undefined)) == Verdict::undefined);
}

TEST_CASE("functor files round-trip") {
  Scratch scratch;
  for (const std::string name : {"P-diamond4", "P-wedge2"}) {
    const auto original = io::read_functor("builtin:" + name);
    const auto path = scratch.path(name + ".json");
    REQUIRE(run({"example", name, "-o", path}).status == 0);
    const auto reread = io::read_functor(path);
    CHECK(reread.source == original.source);
    CHECK(reread.target == original.target);
    CHECK(reread.map == original.map);
  }
  const auto diamond = io::read_category("builtin:diamond");
  CHECK(io::category_data_from_json(io::category_to_json(diamond)) == diamond);
}
