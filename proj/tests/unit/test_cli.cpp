#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "varpde/conservation.hpp"
#include "varpde/experiments.hpp"
#include "varpde/io.hpp"

using namespace varpde;
namespace fs = std::filesystem;

namespace {

fs::path out_dir(const std::string& name) {
  const char* base = std::getenv("VARPDE_TEST_TMP");
  fs::path dir = fs::path(base ? base : fs::temp_directory_path().string()) / "cli" / name;
  fs::remove_all(dir);
  return dir;
}

int run(std::vector<std::string> args, std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  if (err_text) *err_text = err.str();
  return code;
}

nlohmann::json read_json(const fs::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

void check_drift_matches_csv(const fs::path& dir, const std::vector<std::string>& names) {
  const auto meta = read_json(dir / "run.json");
  const auto table = read_csv((dir / "invariants.csv").string());
  for (const auto& name : names) {
    const auto col = table.numeric_column(name);
    REQUIRE(!col.empty());
    const double drift = meta["drift"][name].get<double>();
    CHECK(drift == relative_drift(col));
    // first and last rows bound the reported drift from below
    CHECK(drift >= std::abs(col.back() - col.front()) / std::max(1.0, std::abs(col.front())));
  }
}

}  // namespace

TEST_CASE("advect writes invariants, snapshots and metadata") {
  const auto dir = out_dir("advect");
  REQUIRE(run({"advect", "--scheme", "veselov", "--nx", "63", "--nt", "100", "--out",
               dir.string()}) == 0);
  CHECK(fs::exists(dir / "invariants.csv"));
  CHECK(fs::exists(dir / "u_000000.txt"));
  CHECK(fs::exists(dir / "u_000099.txt"));
  std::size_t snapshots = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    snapshots += e.path().filename().string().rfind("u_", 0) == 0;
  }
  CHECK(snapshots == 11);
  const auto table = read_csv((dir / "invariants.csv").string());
  CHECK(table.rows.size() == 99);
  check_drift_matches_csv(dir, {"mass", "l2", "momentum", "energy"});
  const auto snap = read_snapshot((dir / "u_000010.txt").string());
  CHECK(snap.nx == 63);
  CHECK(snap.ny == 1);
  CHECK(snap.t == Catch::Approx(10 * 2.5e-3));
  const auto meta = read_json(dir / "run.json");
  CHECK(meta["command"] == "advect");
  CHECK(meta["bootstrap"] == "exact");
}

TEST_CASE("vorticity run") {
  const auto dir = out_dir("vorticity");
  REQUIRE(run({"vorticity", "--nx", "16", "--ny", "16", "--nt", "5", "--snap-every", "2",
               "--out", dir.string()}) == 0);
  for (const char* f : {"omega_000000.txt", "psi_000000.txt", "omega_000002.txt",
                        "omega_000004.txt", "omega_000005.txt"}) {
    CHECK(fs::exists(dir / f));
  }
  CHECK_FALSE(fs::exists(dir / "omega_000003.txt"));
  check_drift_matches_csv(dir, {"circulation", "enstrophy", "energy"});

  const auto lin = out_dir("linear");
  REQUIRE(run({"vorticity", "--ic", "separatrix", "--nx", "16", "--ny", "16", "--nt", "3",
               "--out", lin.string()}) == 0);
  CHECK(read_json(lin / "run.json")["linear"] == true);
}

TEST_CASE("dispersion outputs") {
  const auto dir = out_dir("dispersion");
  REQUIRE(run({"dispersion", "--scheme", "leapfrog", "--nu", "1.25", "--nx", "101", "--out",
               dir.string()}) == 0);
  const auto t = read_csv((dir / "dispersion.csv").string());
  CHECK(t.header == std::vector<std::string>{"xi", "tau", "branch"});
  CHECK(!t.rows.empty());
  CHECK(read_csv((dir / "invariants.csv").string()).rows.empty());

  const auto exp = out_dir("dispersion_exp");
  REQUIRE(run({"dispersion", "--ic", "cosine", "--nx", "31", "--nt", "64", "--out",
               exp.string()}) == 0);
  const auto te = read_csv((exp / "dispersion.csv").string());
  std::size_t experimental = 0;
  for (const auto& row : te.rows) experimental += row[2] == "experimental";
  CHECK(experimental == 16);
}

TEST_CASE("exit codes") {
  std::string err;
  CHECK(run({"advect", "--nx", "0"}, &err) == 2);
  CHECK(err.find("--nx") != std::string::npos);
  CHECK(run({"advect", "--unknown"}) == 2);
  CHECK(run({}) == 2);
  CHECK(run({"advect", "--help"}) == 0);
  CHECK(run({"advect", "--scheme", "veselov", "--nx", "64", "--out",
             out_dir("even").string()}, &err) == 4);
  CHECK(err.find("singular") != std::string::npos);
  CHECK(run({"advect", "--nx", "1", "--out", out_dir("tiny").string()}) == 4);
  CHECK(run({"advect", "--nt", "1", "--out", out_dir("short").string()}) == 2);
  // a time step far too large for the fixed-point iteration
  CHECK(run({"vorticity", "--nx", "16", "--ny", "16", "--nt", "2", "--ht", "50", "--out",
             out_dir("diverge").string()}, &err) == 3);
}

TEST_CASE("exit code mapping") {
  CHECK(exit_code(ErrorKind::Parse) == 2);
  CHECK(exit_code(ErrorKind::NonConvergence) == 3);
  CHECK(exit_code(ErrorKind::LinearSolve) == 3);
  CHECK(exit_code(ErrorKind::InvalidGrid) == 4);
  CHECK(exit_code(ErrorKind::InvalidField) == 4);
  CHECK(exit_code(ErrorKind::SingularSystem) == 4);
}
