#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "novikov/classify.hpp"
#include "novikov/cli.hpp"
#include "novikov/io.hpp"

using namespace novikov;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "novikov");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "novikov-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

std::string write_algebra(const std::string& name, const Algebra& a, std::optional<SymForm> form = {}) {
  return write(name, serialize_algebra_file({a, std::move(form), name, std::nullopt}));
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("check reports identities through the exit code") {
  const auto good = run({"check", "--input", write_algebra("f2.json", make_family(2, 3))});
  CHECK(good.code == cli::kExitOk);
  CHECK(contains(good.out, "fermionic true"));

  const auto line = run({"check", "--input", write_algebra("line.json", AlgebraBuilder(1).add(0, 0, 0, 1).build())});
  CHECK(line.code == cli::kExitPropertyFailed);
  CHECK(contains(line.out, "fermionic false"));

  const auto mutated =
      run({"check", "--input", write_algebra("mut.json", AlgebraBuilder(2).add(0, 1, 1, 1).add(0, 1, 0, 1).build())});
  CHECK(mutated.code == cli::kExitPropertyFailed);
  CHECK(contains(mutated.out, "left_symmetric false"));
}

TEST_CASE("gen, scramble and canon compose") {
  const std::string gen = scratch("gen.json").string();
  REQUIRE(run({"gen", "--variant", "3", "--dim", "5", "--output", gen}).code == cli::kExitOk);
  const std::string scr = scratch("scr.json").string();
  REQUIRE(run({"scramble", "--input", gen, "--seed", "4", "--output", scr}).code == cli::kExitOk);
  const auto canon = run({"canon", "--input", scr, "--seed", "4"});
  CHECK(canon.code == cli::kExitOk);
  CHECK(contains(canon.out, "theorem holds"));
  const auto cls = run({"classify", "--input", scr});
  CHECK(cls.code == cli::kExitOk);
  CHECK(cls.out == "3\n");

  const std::string k2 = scratch("k2.json").string();
  REQUIRE(run({"gen", "--variant", "k2", "--dim", "6", "--seed", "2", "--output", k2}).code == cli::kExitOk);
  CHECK(run({"classify", "--input", k2}).out == "k≥2\n");
  CHECK(run({"verify", "--input", k2}).code == cli::kExitOk);
}

TEST_CASE("forms reports the solution space") {
  const auto r = run({"forms", "--input", write_algebra("f1.json", make_family(1, 2))});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "invariant form space dimension 2"));
}

TEST_CASE("verify over a small corpus") {
  const auto r = run({"verify", "--count", "10", "--seed", "3"});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "10/10 pass"));
}

TEST_CASE("json output is byte-identical across reruns") {
  const std::vector<std::string> args{"verify", "--count", "5", "--seed", "11", "--json"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == cli::kExitOk);
  CHECK(a.out == b.out);
  const std::string f = write_algebra("f3.json", make_family(3, 4));
  CHECK(run({"canon", "--input", f, "--json"}).out == run({"canon", "--input", f, "--json"}).out);
}

TEST_CASE("usage errors exit with code 2") {
  const std::string degenerate =
      write_algebra("degenerate.json", make_family(1, 2), SymForm(Mat::from_rows({{0, 0}, {0, 1}})));
  const auto d = run({"canon", "--input", degenerate});
  CHECK(d.code == cli::kExitUsage);
  CHECK(contains(d.err, "degenerate form"));

  const auto bad = run({"check", "--input", write("bad.json", "{\"dim\": 2,,}")});
  CHECK(bad.code == cli::kExitUsage);
  CHECK(contains(bad.err, "bad input file"));

  CHECK(run({"check", "--input", scratch("missing.json").string()}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"gen", "--variant", "9", "--dim", "3"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("seed comes from the environment unless given") {
  const std::string f = write_algebra("env.json", make_family(1, 3));
  ::setenv(cli::kSeedEnv, "5", 1);
  const auto from_env = run({"scramble", "--input", f});
  ::unsetenv(cli::kSeedEnv);
  const auto explicit_seed = run({"scramble", "--input", f, "--seed", "5"});
  CHECK(from_env.code == cli::kExitOk);
  CHECK(from_env.out == explicit_seed.out);
  ::setenv(cli::kSeedEnv, "nope", 1);
  CHECK(run({"check", "--input", f}).code == cli::kExitUsage);
  ::unsetenv(cli::kSeedEnv);
}

TEST_CASE("installed binary") {
  const char* bin = std::getenv("NOVIKOV_CLI");
  if (bin == nullptr) return;
  const std::string f = write_algebra("bin.json", AlgebraBuilder(1).add(0, 0, 0, 1).build());
  const std::string cmd = std::string(bin) + " check --input " + f + " > /dev/null";
  const int status = std::system(cmd.c_str());
  CHECK(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == cli::kExitPropertyFailed);
  CHECK(WEXITSTATUS(std::system((std::string(bin) + " verify --count 3 > /dev/null").c_str())) == 0);
}
