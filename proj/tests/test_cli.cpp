#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "conjzoo/alg_format.hpp"
#include "conjzoo/cli.hpp"
#include "golden_cases.hpp"

using namespace conjzoo;

namespace {

const std::filesystem::path kGolden = CONJZOO_GOLDEN_DIR;
const std::string kData = CONJZOO_DATA_DIR;

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("golden outputs") {
  int count = 0;
  for (const auto& c : read_golden_cases((kGolden / "cases.txt").string(), kData)) {
    const auto r = run(c.args);
    CAPTURE(c.file);
    CHECK(r.status == c.status);
    CHECK(r.out == slurp(kGolden / c.file));
    ++count;
  }
  CHECK(count > 20);
}

TEST_CASE("emitted algebras re-parse to the same value") {
  for (const char* f : {"double_rp2.alg", "double_floyd_z.alg"}) {
    const auto text = slurp(kGolden / f);
    CHECK(alg::print(alg::parse(text)) == text);
  }
  const auto halved = run({"halve", kData + "/floyd_y.alg"});
  CHECK(halved.status == 0);
  CHECK(alg::print(alg::parse(halved.out)) == halved.out);
}

TEST_CASE("exit statuses") {
  CHECK(run({}).status == kExitUsage);
  CHECK(run({"frobnicate"}).status == kExitUsage);
  CHECK(run({"adem"}).status == kExitUsage);
  CHECK(run({"--bogus", "adem", "Sq1"}).status == kExitUsage);
  CHECK(run({"check", kData + "/missing.alg"}).status == kExitUsage);
  CHECK(run({"catalog", "verify", "nope"}).status == kExitUsage);
  CHECK(run({"--help"}).status == kExitOk);

  const auto bad = run({"adem", "Sq2 Sq"});
  CHECK(bad.status == kExitInvalidInput);
  CHECK(bad.err == "error: 1:7: expected a number\n");

  const auto halve = run({"halve", kData + "/rp2.alg"});
  CHECK(halve.status == kExitInvalidInput);

  const auto present = run({"present", kData + "/commutator.pres"});
  CHECK(present.status == kExitInvalidInput);
  CHECK(present.err.find("not a square") != std::string::npos);
}

TEST_CASE("output file and degree cap") {
  const auto path = std::filesystem::temp_directory_path() / "conjzoo_cli_test.txt";
  const auto r = run({"--output", path.string(), "adem", "Sq1 Sq2"});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path) == "Sq3\n");
  std::filesystem::remove(path);

  const auto capped = run({"--max-degree", "3", "double", kData + "/floyd_z.alg", "--ring-only"});
  CHECK(capped.status == 0);
  CHECK(capped.out.find("f2*f3") == std::string::npos);
}

TEST_CASE("property suite is deterministic under a seed") {
  const auto a = run({"--json", "--seed", "5", "props", "--samples", "20"});
  const auto b = run({"--json", "--seed", "5", "props", "--samples", "20"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}
