#include "nanobeam/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "nanobeam/config.hpp"
#include "nanobeam/csv.hpp"
#include "nanobeam/errors.hpp"
#include "nanobeam/svg.hpp"
#include "nanobeam/verify.hpp"

namespace nanobeam {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string config_path;
  std::string out_dir;
  int modes = 0;
  long long seed = -1;
  bool svg = false;
};

class Output {
public:
  Output(const std::string& dir, std::ostream& log) : dir_(dir), log_(log) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw ValidationError("cannot create output directory " + dir_.string() + ": " + ec.message());
  }

  void write(const std::string& name, const std::string& content) {
    const fs::path path = dir_ / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot write " + path.string());
    f << content;
    if (!f) throw ValidationError("write failed: " + path.string());
    log_ << "wrote " << path.string() << '\n';
  }

private:
  fs::path dir_;
  std::ostream& log_;
};

void apply_thread_cap() {
  const char* env = std::getenv("NANOBEAM_THREADS");
  if (!env || !*env) return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1) throw ValidationError(std::string("NANOBEAM_THREADS must be a positive integer, got '") + env + "'");
  omp_set_num_threads(static_cast<int>(n));
}

RunConfig resolve_config(const Options& o) {
  RunConfig cfg = o.config_path.empty() ? RunConfig{} : load_config(o.config_path);
  if (o.modes != 0) cfg.n_modes = o.modes;
  if (o.seed >= 0) cfg.seed = static_cast<std::uint64_t>(o.seed);
  if (!o.out_dir.empty()) cfg.out_dir = o.out_dir;
  validate_config(cfg);
  return cfg;
}

template <typename Fn>
std::string to_string(Fn&& fn) {
  std::ostringstream os;
  fn(os);
  return os.str();
}

int run_spectrum(const RunConfig& cfg, Output& out) {
  const auto rows = csv::spectrum_rows(cfg.params, cfg.n_modes);
  out.write("spectrum.csv", to_string([&](std::ostream& os) { csv::write_spectrum(os, rows); }));
  return 0;
}

int run_resolvent(const RunConfig& cfg, Output& out, bool svg, std::ostream& log) {
  const auto grid = cfg.lambda.values();
  const auto scan = analyticity_scan(cfg.params, cfg.n_modes, grid);
  out.write("resolvent.csv", to_string([&](std::ostream& os) { csv::write_resolvent(os, scan); }));
  log << "sup lambda*||R|| = " << csv::format(scan.sup_analyticity) << " at lambda = "
      << csv::format(scan.lambda_at_sup_analyticity) << '\n';
  if (svg) {
    svg::LinePlot plot{"lambda ||(i lambda - B)^-1||", "lambda", "value", true, true, {}};
    svg::Series a{"lambda * norm", {}, {}}, r{"norm", {}, {}};
    for (const auto& pt : scan.points) {
      a.x.push_back(pt.lambda);
      a.y.push_back(pt.analyticity_value);
      r.x.push_back(pt.lambda);
      r.y.push_back(pt.resolvent_norm);
    }
    plot.series = {a, r};
    out.write("resolvent.svg", svg::render(plot));
  }
  return 0;
}

int run_simulate(const RunConfig& cfg, Output& out, bool svg, std::ostream& log) {
  ModalState u0(cfg.n_modes);
  if (cfg.initial == "eigen")
    u0 = eigenvector_excitation(cfg.params, cfg.n_modes, cfg.excitation_mode).state;
  else if (cfg.initial == "random")
    u0 = random_initial_state(cfg.params, cfg.n_modes, cfg.seed);
  const auto times = cfg.time.values();
  PropagateOptions opt;
  opt.method = cfg.method == "eigen" ? ExpMethod::eigen : ExpMethod::pade;
  opt.keep_states = false;
  const auto traj = propagate(cfg.params, u0, times, opt);
  out.write("simulate.csv", to_string([&](std::ostream& os) { csv::write_simulation(os, traj); }));
  if (!u0.is_zero() && times.size() >= 2) {
    const auto fit = fit_decay_rate(traj);
    log << "fitted decay rate " << csv::format(fit.omega) << " (r^2 " << csv::format(fit.r_squared) << ")\n";
  }
  if (svg) {
    svg::LinePlot plot{"energy along the flow", "t", "energy", false, !u0.is_zero(), {}};
    svg::Series e{"total", traj.times, {}}, d{"dissipation", traj.times, traj.dissipations};
    for (const auto& en : traj.energies) e.y.push_back(en.total);
    plot.series = {e, d};
    out.write("simulate.svg", svg::render(plot));
  }
  return 0;
}

int run_sweep(const RunConfig& cfg, Output& out, bool svg, std::ostream& log) {
  const auto grid = cfg.lambda.values();
  const auto rep = sweep_alpha_beta(cfg.params, cfg.n_modes, cfg.alpha_grid, cfg.beta_grid, grid);
  out.write("sweep.csv", to_string([&](std::ostream& os) { csv::write_sweep(os, rep); }));
  bool all_ok = true;
  for (const auto& c : rep.cells)
    if (!c.ok) {
      all_ok = false;
      log << "cell alpha=" << csv::format(c.alpha) << " beta=" << csv::format(c.beta) << " failed: " << c.error << '\n';
    }
  if (svg) {
    svg::HeatMap map{"log10 sup lambda ||R(i lambda)||", "beta", "alpha", rep.beta_grid, rep.alpha_grid, {}};
    for (const auto& c : rep.cells) map.values.push_back(c.ok ? std::log10(c.sup_analyticity) : NAN);
    out.write("sweep.svg", svg::render(map));
  }
  return all_ok ? 0 : 2;
}

int run_lemmas(const RunConfig& cfg, Output& out) {
  const auto table = lemma_scan(cfg.params, cfg.n_modes, cfg.lemma_lambdas, cfg.lemma_trials, cfg.seed);
  out.write("lemmas.csv", to_string([&](std::ostream& os) { csv::write_lemmas(os, table); }));
  return 0;
}

int run_oracle(const RunConfig& cfg, Output& out, std::ostream& log) {
  std::vector<SpectrumComparison> reps;
  for (int M : cfg.fd_grids) reps.push_back(compare_spectra(cfg.params, M, cfg.fd_n_low));
  out.write("oracle.csv", to_string([&](std::ostream& os) { csv::write_oracle(os, reps); }));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    log << "M=" << reps[i].M << " max rel err " << csv::format(reps[i].max_rel_error) << " mode 1 "
        << csv::format(reps[i].mode1_rel_error);
    if (i > 0) log << " ratio " << csv::format(reps[i - 1].max_rel_error / reps[i].max_rel_error);
    log << '\n';
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral analysis of the damped double-wall nanotube beam model", "nanobeam"};
  Options o;
  app.add_option("--config", o.config_path, "key = value configuration file");
  app.add_option("--out", o.out_dir, "output directory (overrides out_dir)");
  app.add_option("--modes", o.modes, "modal truncation N (overrides n_modes)")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "random seed (overrides seed)")->check(CLI::NonNegativeNumber);
  app.add_flag("--svg", o.svg, "also emit SVG plots");
  app.require_subcommand(1);

  const char* names[][2] = {
      {"spectrum", "eigenvalues of every mode block"},
      {"resolvent", "energy-norm resolvent along the imaginary axis"},
      {"simulate", "exact modal flow and energy trajectory"},
      {"sweep", "abscissa and resolvent bounds over the (alpha, beta) grid"},
      {"lemmas", "resolvent-estimate ratios for random forcings"},
      {"verify", "invariant suite with a pass/fail table"},
      {"oracle", "finite-difference spectrum cross-check"},
  };
  for (const auto& n : names) app.add_subcommand(n[0], n[1]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "nanobeam: " << e.what() << '\n';
    return 1;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    apply_thread_cap();
    const RunConfig cfg = resolve_config(o);
    if (cmd == "verify") {
      const auto rows = run_invariants(cfg);
      print_invariants(out, rows);
      for (const auto& r : rows)
        if (!r.pass) return 2;
      return 0;
    }
    Output files(cfg.out_dir, out);
    if (cmd == "spectrum") return run_spectrum(cfg, files);
    if (cmd == "resolvent") return run_resolvent(cfg, files, o.svg, out);
    if (cmd == "simulate") return run_simulate(cfg, files, o.svg, out);
    if (cmd == "sweep") return run_sweep(cfg, files, o.svg, out);
    if (cmd == "lemmas") return run_lemmas(cfg, files);
    if (cmd == "oracle") return run_oracle(cfg, files, out);
  } catch (const ValidationError& e) {
    err << "nanobeam: " << e.what() << '\n';
    return 1;
  } catch (const NumericalError& e) {
    err << "nanobeam: numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "nanobeam: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace nanobeam
