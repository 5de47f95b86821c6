#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "nanobeam/cli.hpp"
#include "nanobeam/config.hpp"
#include "nanobeam/csv.hpp"
#include "nanobeam/errors.hpp"

using namespace nanobeam;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "nanobeam");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("nanobeam_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string first_line(const fs::path& p) {
  std::ifstream f(p);
  std::string line;
  std::getline(f, line);
  return line;
}

fs::path write_config(const fs::path& dir, const std::string& text) {
  const fs::path p = dir / "run.cfg";
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("config parsing") {
  const auto cfg = parse_config("# comment\n rho1 = 2.5  # trailing\nalpha_grid = 0, 0.25\nlambda_log = false\n\nseed=9\n");
  CHECK(cfg.params.rho1 == 2.5);
  CHECK(cfg.alpha_grid == std::vector<double>{0.0, 0.25});
  CHECK_FALSE(cfg.lambda.log);
  CHECK(cfg.seed == 9);
  CHECK_THROWS_AS(parse_config("bogus = 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("rho1 2\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("rho1 = two\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("gamma2 = -1\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("lambda_count = 0\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("beta_grid = 0, 1.5\n"), ValidationError);
}

TEST_CASE("missing config file exits 1 naming the path") {
  const auto r = run({"--config", "/definitely/not/here.cfg", "spectrum"});
  CHECK(r.code == 1);
  CHECK(r.err.find("/definitely/not/here.cfg") != std::string::npos);
}

TEST_CASE("invalid input exits 1") {
  const auto dir = scratch("invalid");
  CHECK(run({"--config", write_config(dir, "gamma2 = 0\n").string(), "spectrum"}).code == 1);
  CHECK(run({"--modes", "-3", "spectrum"}).code == 1);
  CHECK(run({"nosuchcommand"}).code == 1);
  CHECK(run({}).code == 1);
}

TEST_CASE("thread cap from the environment") {
  const auto dir = scratch("threads");
  setenv("NANOBEAM_THREADS", "zero", 1);
  CHECK(run({"--out", dir.string(), "--modes", "4", "spectrum"}).code == 1);
  setenv("NANOBEAM_THREADS", "1", 1);
  CHECK(run({"--out", dir.string(), "--modes", "4", "spectrum"}).code == 0);
  unsetenv("NANOBEAM_THREADS");
}

TEST_CASE("simulate with zero initial data writes an all-zero energy column") {
  const auto dir = scratch("zero");
  const auto cfg = write_config(dir, "initial = zero\nt_end = 2\nt_count = 21\nn_modes = 16\n");
  const auto r = run({"--config", cfg.string(), "--out", dir.string(), "simulate"});
  REQUIRE(r.code == 0);
  std::ifstream f(dir / "simulate.csv");
  std::string line;
  std::getline(f, line);
  CHECK(line == csv::simulate_header);
  int rows = 0;
  while (std::getline(f, line)) {
    ++rows;
    const auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
    CHECK(line.substr(c1 + 1, c2 - c1 - 1) == "0");
  }
  CHECK(rows == 21);
}

TEST_CASE("every subcommand writes its exact header") {
  const auto dir = scratch("headers");
  const auto cfg = write_config(dir,
                                "n_modes = 16\nlambda_count = 12\nlambda_max = 1e4\nt_count = 51\nt_end = 1\n"
                                "lemma_trials = 3\nfd_grids = 40, 80\nfd_n_low = 2\n");
  const std::string c = cfg.string(), o = dir.string();
  REQUIRE(run({"--config", c, "--out", o, "spectrum"}).code == 0);
  REQUIRE(run({"--config", c, "--out", o, "--svg", "resolvent"}).code == 0);
  REQUIRE(run({"--config", c, "--out", o, "--svg", "simulate"}).code == 0);
  REQUIRE(run({"--config", c, "--out", o, "--svg", "sweep"}).code == 0);
  REQUIRE(run({"--config", c, "--out", o, "lemmas"}).code == 0);
  REQUIRE(run({"--config", c, "--out", o, "oracle"}).code == 0);
  CHECK(first_line(dir / "spectrum.csv") == "mode,sigma,re_lambda,im_lambda");
  CHECK(first_line(dir / "resolvent.csv") == "lambda,resolvent_norm,analyticity_value,argmax_mode");
  CHECK(first_line(dir / "simulate.csv") == "t,energy_total,energy_kinetic,energy_potential,dissipation");
  CHECK(first_line(dir / "sweep.csv") == "alpha,beta,spectral_abscissa,sup_resolvent,sup_analyticity");
  CHECK(first_line(dir / "lemmas.csv") == "lambda,quantity,ratio_max");
  CHECK(first_line(dir / "oracle.csv") == csv::oracle_header);
  for (const char* svg : {"resolvent.svg", "simulate.svg", "sweep.svg"})
    CHECK(slurp(dir / svg).rfind("<svg", 0) == 0);
  // 16 modes x 8 eigenvalues + header
  const std::string spec = slurp(dir / "spectrum.csv");
  CHECK(std::count(spec.begin(), spec.end(), '\n') == 129);
}

TEST_CASE("identical config and seed give byte-identical output") {
  const auto a = scratch("det_a"), b = scratch("det_b");
  const std::string text = "n_modes = 24\ninitial = random\nt_count = 101\nt_end = 3\nlemma_trials = 5\n";
  const auto ca = write_config(a, text), cb = write_config(b, text);
  for (const char* cmd : {"simulate", "lemmas"}) {
    REQUIRE(run({"--config", ca.string(), "--out", a.string(), "--seed", "42", cmd}).code == 0);
    REQUIRE(run({"--config", cb.string(), "--out", b.string(), "--seed", "42", cmd}).code == 0);
  }
  CHECK(slurp(a / "simulate.csv") == slurp(b / "simulate.csv"));
  CHECK(slurp(a / "lemmas.csv") == slurp(b / "lemmas.csv"));
  REQUIRE(run({"--config", cb.string(), "--out", b.string(), "--seed", "43", "lemmas"}).code == 0);
  CHECK(slurp(a / "lemmas.csv") != slurp(b / "lemmas.csv"));
}

TEST_CASE("verify passes on the all-ones configuration") {
  const auto r = run({"verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("pass") != std::string::npos);
}

TEST_CASE("seventeen significant digits") {
  CHECK(csv::format(0.1) == "0.10000000000000001");
  CHECK(csv::format(-2.0) == "-2");
  CHECK(std::stod(csv::format(1.0 / 3.0)) == 1.0 / 3.0);
}
