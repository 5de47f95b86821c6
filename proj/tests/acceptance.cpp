// Acceptance suite: one PASS/FAIL line per criterion, with runtime against
// its budget. `acceptance --only k` runs a single criterion (used by ctest).

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nanobeam/energy.hpp"
#include "nanobeam/fd_oracle.hpp"
#include "nanobeam/lemma_scan.hpp"
#include "nanobeam/modal_assembly.hpp"
#include "nanobeam/resolvent.hpp"
#include "nanobeam/time_evolution.hpp"

using namespace nanobeam;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void note(bool ok, const char* fmt, ...) __attribute__((format(printf, 3, 4))) {
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    lines.push_back(std::string(ok ? "ok    " : "FAIL  ") + buf);
    pass = pass && ok;
  }

  void info(const std::string& text) { lines.push_back("      " + text); }
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

const double kExponents[] = {0.0, 0.5, 1.0};

BeamParams cell(double a, double b) {
  BeamParams p;
  p.alpha = a;
  p.beta = b;
  return p;
}

double rel_change(double a, double b) { return std::abs(b - a) / std::abs(a); }

// logspace(lo, hi, count) continued with the same ratio up to ceiling
std::vector<double> extended_grid(double lo, double hi, int count, double ceiling) {
  auto g = log_grid(lo, hi, count);
  const double ratio = g[1] / g[0];
  for (double x = g.back() * ratio; x <= ceiling * (1 + 1e-12); x *= ratio) g.push_back(x);
  if (g.back() < ceiling) g.push_back(ceiling);
  return g;
}

Outcome dissipativity() {
  Outcome out;
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  for (double a : kExponents)
    for (double b : kExponents) {
      const BeamParams p = cell(a, b);
      double worst = 0.0;
      for (int n = 1; n <= 64; ++n) {
        const ModeBlock blk = assemble_block(p, n);
        const ModeBlock::Matrix HB = blk.H * blk.B;
        const double scale = HB.norm();
        for (int t = 0; t < 1000; ++t) {
          Eigen::Matrix<std::complex<double>, kStateSize, 1> x;
          for (int i = 0; i < kStateSize; ++i) x[i] = {normal(rng), normal(rng)};
          const double lhs = (x.adjoint() * HB * x)(0).real() + (x.adjoint() * blk.D * x)(0).real();
          worst = std::max(worst, std::abs(lhs) / (x.squaredNorm() * scale));
        }
      }
      out.note(worst <= 1e-12, "alpha=%.1f beta=%.1f  max |Re x*HBx + x*Dx| / (|x|^2 |HB|) = %.2e", a, b, worst);
    }
  return out;
}

Outcome well_posedness() {
  Outcome out;
  const BeamParams p;
  std::uint64_t state = 2;
  const auto f = random_unit_forcing(p, 256, state);
  const BlockResolvent r256(p, 256);
  const auto u = r256.solve(0.0, f);
  auto back = r256.apply_shifted(0.0, u);
  for (int n = 1; n <= 256; ++n) back.mode(n) -= f.mode(n);
  const double rt = energy_norm(back, p) / energy_norm(f, p);
  out.note(rt <= 1e-10, "round trip ||(0 - B) U - F|| / ||F|| = %.2e (N=256)", rt);

  const double n256 = resolvent_norm(p, 256, 0.0).value, n512 = resolvent_norm(p, 512, 0.0).value;
  out.note(rel_change(n256, n512) < 0.01, "||B^{-1}||_H  N=256: %.12g  N=512: %.12g  drift %.2e", n256, n512,
           rel_change(n256, n512));

  // fixed low-mode forcing embedded in both truncations
  ComplexModalState g256(256), g512(512);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  for (int n = 1; n <= 8; ++n)
    for (int i = 0; i < kStateSize; ++i) g256.mode(n)[i] = g512.mode(n)[i] = {normal(rng), normal(rng)};
  const double s256 = energy_norm(resolve(p, 0.0, g256), p) / energy_norm(g256, p);
  const double s512 = energy_norm(resolve(p, 0.0, g512), p) / energy_norm(g512, p);
  out.note(rel_change(s256, s512) < 0.01, "||U|| / ||F||  N=256: %.12g  N=512: %.12g  drift %.2e", s256, s512,
           rel_change(s256, s512));
  return out;
}

Outcome exponential_stability() {
  Outcome out;
  for (double a : kExponents)
    for (double b : kExponents) {
      const BeamParams p = cell(a, b);
      const ModeMax w256 = spectral_abscissa(p, 256), w512 = spectral_abscissa(p, 512);
      const double dw = std::abs(w512.value - w256.value);

      const auto ex = eigenvector_excitation(p, 256, w256.mode);
      std::vector<double> times;
      for (int k = 0; k <= 40; ++k) times.push_back(k * std::numbers::pi / std::abs(ex.eigenvalue.imag()));
      PropagateOptions opt;
      opt.keep_states = false;
      const DecayFit fit = fit_decay_rate(propagate(p, ex.state, times, opt));
      const double fit_err = rel_change(w256.value, fit.omega);

      out.note(w256.value < 0.0 && dw < 1e-8 && fit_err <= 1e-3,
               "alpha=%.1f beta=%.1f  omega(256)=%.15f  |omega(512)-omega(256)|=%.1e  fitted %.12f (rel %.1e)", a, b,
               w256.value, dw, fit.omega, fit_err);
    }
  return out;
}

Outcome analyticity() {
  Outcome out;
  const auto base = log_grid(0.1, 1e6, 200);
  const auto wide = extended_grid(0.1, 1e6, 200, 2e6);
  for (double a : kExponents)
    for (double b : kExponents) {
      const BeamParams p = cell(a, b);
      const double s256 = analyticity_scan(p, 256, base).sup_analyticity;
      const auto scan512 = analyticity_scan(p, 512, base);
      const double s512 = scan512.sup_analyticity;
      const double s_wide = analyticity_scan(p, 512, wide).sup_analyticity;
      const double dn = rel_change(s256, s512), dc = rel_change(s512, s_wide);
      out.note(dn < 0.05 && dc < 0.05,
               "alpha=%.1f beta=%.1f  sup lambda||R||: N=256 %.6g  N=512 %.6g (%.2f%%)  ceiling 2e6 %.6g (%.2f%%)  "
               "argmax lambda %.3g",
               a, b, s256, s512, 100 * dn, s_wide, 100 * dc, scan512.lambda_at_sup_analyticity);
    }
  return out;
}

Outcome lemma_bounds() {
  Outcome out;
  const BeamParams p;
  const std::vector<double> lambdas{1.0, 10.0, 1e3, 1e6};
  const auto t128 = lemma_scan(p, 128, lambdas, 100, 5);
  const auto t256 = lemma_scan(p, 256, lambdas, 100, 6);
  for (const auto& q : lemma_quantities()) {
    const double at1 = t128.at(1.0, q);
    const double sup = std::max(t128.max_over_lambda(q), t256.max_over_lambda(q));
    out.note(sup <= 2.0 * at1, "%-22s  lambda=1: %.4g  max over lambda, N: %.4g  (x%.2f)", q.c_str(), at1, sup,
             sup / at1);
    char buf[256];
    int len = std::snprintf(buf, sizeof buf, "per lambda, N=128 / N=256:");
    for (double l : lambdas)
      len += std::snprintf(buf + len, sizeof buf - len, "  %.0e: %.4f / %.4f", l, t128.at(l, q), t256.at(l, q));
    out.info(buf);
  }
  return out;
}

Outcome energy_identity() {
  Outcome out;
  for (double e : kExponents) {
    const BeamParams p = cell(e, e);
    const auto ex = eigenvector_excitation(p, 256, 1);
    PropagateOptions opt;
    opt.keep_states = false;
    const double r1 = check_energy_identity(propagate(p, ex.state, linear_grid(0.0, 2.0, 20001), opt), p)
                          .normalized_residual;
    const double r2 = check_energy_identity(propagate(p, ex.state, linear_grid(0.0, 2.0, 40001), opt), p)
                          .normalized_residual;
    const double ratio = r1 / r2;
    out.note(r1 <= 1e-6 && ratio >= 3.5 && ratio <= 4.5,
             "alpha=beta=%.1f  residual dt=1e-4: %.3e  dt=5e-5: %.3e  ratio %.3f", e, r1, r2, ratio);
  }
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  BeamParams p;
  p.alpha = p.beta = 1.0;
  double prev = 0.0;
  for (int M : {100, 200, 400, 800}) {
    const auto rep = compare_spectra(p, M, 5);
    if (prev > 0.0) {
      const double ratio = prev / rep.max_rel_error;
      out.note(ratio >= 3.5 && ratio <= 4.5, "M=%d  max rel err %.3e  ratio %.4f  (%zu eigenvalues)", M,
               rep.max_rel_error, ratio, rep.matches.size());
    } else {
      out.note(true, "M=%d  max rel err %.3e  (%zu eigenvalues)", M, rep.max_rel_error, rep.matches.size());
    }
    if (M == 800) out.note(rep.mode1_rel_error <= 1e-3, "M=800  mode-1 rel err %.3e", rep.mode1_rel_error);
    prev = rep.max_rel_error;
  }
  return out;
}

Outcome timoshenko() {
  Outcome out;
  const auto base = log_grid(0.1, 1e6, 200);
  const auto wide = extended_grid(0.1, 1e6, 200, 2e6);
  for (double a : kExponents) {
    BeamParams p = cell(a, a);
    p.m = 0.0;
    bool exact = true;
    for (int n = 1; n <= 256 && exact; ++n) {
      const ModeBlock full = assemble_block(p, n);
      const TimoshenkoBlock in = timoshenko_block(p, n, Beam::inner), ou = timoshenko_block(p, n, Beam::outer);
      exact = in.B == full.B.topLeftCorner<4, 4>() && in.H == full.H.topLeftCorner<4, 4>() &&
              in.D == full.D.topLeftCorner<4, 4>() && ou.B == full.B.bottomRightCorner<4, 4>() &&
              ou.H == full.H.bottomRightCorner<4, 4>() && ou.D == full.D.bottomRightCorner<4, 4>();
    }
    out.note(exact, "alpha=%.1f  4x4 blocks equal the m=0 sub-blocks bitwise (n=1..256, both beams)", a);

    const double w = timoshenko_abscissa(p, 256, Beam::inner).value;
    const double s256 = timoshenko_analyticity_scan(p, 256, base).sup_analyticity;
    const double s512 = timoshenko_analyticity_scan(p, 512, base).sup_analyticity;
    const double sw = timoshenko_analyticity_scan(p, 512, wide).sup_analyticity;
    const double dn = rel_change(s256, s512), dc = rel_change(s512, sw);
    out.note(w < 0.0 && dn < 0.05 && dc < 0.05,
             "alpha=%.1f  abscissa %.6f  sup lambda||R||: N=256 %.6g  N=512 %.6g (%.2f%%)  ceiling 2e6 %.6g (%.2f%%)", a,
             w, s256, s512, 100 * dn, sw, 100 * dc);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--only K]\n");
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "dissipativity identity", 5, dissipativity},
      {2, "well-posedness at lambda = 0", 5, well_posedness},
      {3, "exponential stability", 30, exponential_stability},
      {4, "analyticity: bounded lambda ||R(i lambda)||", 300, analyticity},
      {5, "resolvent lemma ratios", 120, lemma_bounds},
      {6, "energy identity along flows", 10, energy_identity},
      {7, "finite-difference oracle equivalence", 60, oracle_equivalence},
      {8, "Timoshenko special case", 30, timoshenko},
  };

  bool all = true;
  int ran = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.note(false, "exception: %s", e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = secs <= c.budget_s;
    const bool pass = o.pass && in_budget;
    all = all && pass;
    std::printf("%s criterion %d: %s  (%.1f s, budget %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.budget_s, in_budget ? "" : ", OVER BUDGET");
    for (const auto& l : o.lines) std::printf("    %s\n", l.c_str());
    std::fflush(stdout);
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return all ? 0 : 1;
}
