#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "htube/cli/app.hpp"
#include "htube/cli/figures.hpp"
#include "htube/io.hpp"

using namespace htube;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "htube");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

fs::path scratch_dir(const char* name) {
  const fs::path d = fs::temp_directory_path() / "htube-tests" / name;
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(call({}).code == cli::kUsage);
  CHECK(call({"nonsense"}).code == cli::kUsage);
  CHECK(call({"profile", "--kappa", "4"}).code == cli::kUsage);
  CHECK(call({"profile", "--kappa", "4", "--tau", "1", "--h", "1", "--phi-range", "0:1"}).code == cli::kUsage);
  CHECK(call({"profile", "--kappa", "4", "--tau", "1", "--h", "0"}).code == cli::kDomain);
  CHECK(call({"profile", "--kappa", "-4", "--tau", "1", "--h", "0.5"}).code == cli::kDomain);
  CHECK(call({"sister", "--kappa-t", "1", "--tau-t", "1", "--theta", "1.5"}).code == cli::kOk);
  CHECK(call({"lattice-sweep", "--kappa-t", "1", "--tau-t", "1"}).code == cli::kDomain);
  CHECK(call({"classify", "--kappa", "4", "--tau", "1", "--format", "svg"}).code == cli::kUsage);
  CHECK(call({"--help"}).code == cli::kOk);
}

TEST_CASE("profile CSV") {
  const auto r = call({"profile", "--kappa", "4", "--tau", "1", "--h", "1", "--phi-range", "0:6.2832:0.01"});
  REQUIRE(r.code == 0);
  std::istringstream is(r.out);
  const auto t = io::read_csv(is);
  CHECK(t.header == std::vector<std::string>{"phi", "r", "h"});
  CHECK(t.rows.size() == 629);
  CHECK(t.rows[0][1] == doctest::Approx(0.392699).epsilon(1e-6));
}

TEST_CASE("foliation JSON") {
  const auto r = call({"foliation", "--kappa", "4", "--tau", "0.4"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["foliates"] == false);
  CHECK(std::abs(j["H0"].get<double>() - 0.4571) < 1e-4);
  CHECK(j["foliated_set"] == "None");
}

TEST_CASE("classify and sister JSON") {
  const auto c = nlohmann::json::parse(call({"classify", "--kappa", "0", "--tau", "0.5"}).out);
  CHECK(c["class"] == "Heisenberg");
  const auto s = nlohmann::json::parse(call({"sister", "--kappa-t", "4", "--tau-t", "1", "--theta", "0.7853981633974483"}).out);
  CHECK(s["kappa"].get<double>() == doctest::Approx(2.0));
  CHECK(s["b"].is_number());
}

TEST_CASE("output files and the output-directory override") {
  const auto dir = scratch_dir("cli-out");
  ::setenv("HTUBE_OUTPUT_DIR", dir.c_str(), 1);
  const auto r = call({"-o", "iso.svg", "--format", "svg", "isoperimetric", "--tau", "1", "--h-range", "0.1:2:0.1"});
  ::unsetenv("HTUBE_OUTPUT_DIR");
  REQUIRE(r.code == 0);
  CHECK(slurp(dir / "iso.svg").rfind("<svg", 0) == 0);
}

TEST_CASE("isoperimetric overlay") {
  const auto dir = scratch_dir("overlay");
  std::ofstream(dir / "cmp.csv") << "volume,area\n1,10\n2,12\n";
  const auto r = call({"--format", "svg", "isoperimetric", "--tau", "1", "--h-range", "0.5:2:0.5", "--overlay",
                       (dir / "cmp.csv").string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("cmp.csv") != std::string::npos);
}

TEST_CASE("identical invocations give byte-identical output") {
  const std::vector<std::string> args = {"profile", "--kappa", "-1", "--tau", "1", "--h", "1", "--method", "ode"};
  CHECK(call(args).out == call(args).out);
  const auto d1 = scratch_dir("fig1"), d2 = scratch_dir("fig2");
  REQUIRE(call({"reproduce-figure", "foliation-berger", "--out-dir", d1.string()}).code == 0);
  REQUIRE(call({"reproduce-figure", "foliation-berger", "--out-dir", d2.string()}).code == 0);
  int n = 0;
  for (const auto& e : fs::directory_iterator(d1)) {
    CHECK(slurp(e.path()) == slurp(d2 / e.path().filename()));
    ++n;
  }
  CHECK(n == 3);
}
