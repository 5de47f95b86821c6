#include "nanobeam/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "nanobeam/errors.hpp"
#include "nanobeam/resolvent.hpp"

namespace nanobeam {

std::vector<double> GridSpec::values() const {
  if (count < 1) throw ValidationError("grid count must be at least 1");
  if (count == 1) return {min};
  return log ? log_grid(min, max, count) : linear_grid(min, max, count);
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, const std::string& where) {
  double out = 0.0;
  const auto* end = v.data() + v.size();
  const auto r = std::from_chars(v.data(), end, out);
  if (r.ec != std::errc() || r.ptr != end) throw ValidationError(where + ": not a number: '" + v + "'");
  return out;
}

long long to_integer(const std::string& v, const std::string& where) {
  long long out = 0;
  const auto* end = v.data() + v.size();
  const auto r = std::from_chars(v.data(), end, out);
  if (r.ec != std::errc() || r.ptr != end) throw ValidationError(where + ": not an integer: '" + v + "'");
  return out;
}

bool to_bool(const std::string& v, const std::string& where) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ValidationError(where + ": not a boolean: '" + v + "'");
}

std::vector<double> to_list(const std::string& v, const std::string& where) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(trim(item), where));
  if (out.empty()) throw ValidationError(where + ": empty list");
  return out;
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> t;
    auto param = [&](const char* key, double BeamParams::*field) {
      t[key] = [field](RunConfig& c, const std::string& v, const std::string& w) { c.params.*field = to_double(v, w); };
    };
    param("rho1", &BeamParams::rho1);
    param("rho2", &BeamParams::rho2);
    param("rho3", &BeamParams::rho3);
    param("rho4", &BeamParams::rho4);
    param("kappa1", &BeamParams::kappa1);
    param("kappa2", &BeamParams::kappa2);
    param("b1", &BeamParams::b1);
    param("b2", &BeamParams::b2);
    param("gamma1", &BeamParams::gamma1);
    param("gamma2", &BeamParams::gamma2);
    param("gamma3", &BeamParams::gamma3);
    param("gamma4", &BeamParams::gamma4);
    param("m", &BeamParams::m);
    param("l", &BeamParams::l);
    param("alpha", &BeamParams::alpha);
    param("beta", &BeamParams::beta);

    t["n_modes"] = [](RunConfig& c, const std::string& v, const std::string& w) {
      c.n_modes = static_cast<int>(to_integer(v, w));
    };
    t["lambda_min"] = [](RunConfig& c, const std::string& v, const std::string& w) { c.lambda.min = to_double(v, w); };
    t["lambda_max"] = [](RunConfig& c, const std::string& v, const std::string& w) { c.lambda.max = to_double(v, w); };
    t["lambda_count"] = [](RunConfig& c, const std::string& v, const std::string& w) {
      c.lambda.count = static_cast<int>(to_integer(v, w));
    };
    t["lambda_log"] = [](RunConfig& c, const std::string& v, const std::string& w) { c.lambda.log = to_bool(v, w); };
    t["alpha_grid"] = [](RunConfig& c, const std::string& v, const std::string& w) { c.alpha_grid = to_list(v, w); };
    t["beta_grid"] = [](RunConfig& c, const std::string& v, const std::string& w) { c.beta_grid = to_list(v, w); };
    t["t_start"] = [](RunConfig& c, const std::string& v, const std::string& w) { c.time.min = to_double(v, w); };
    t["t_end"] = [](RunConfig& c, const std::string& v, const std::string& w) { c.time.max = to_double(v, w); };
    t["t_count"] = [](RunConfig& c, const std::string& v, const std::string& w) {
      c.time.count = static_cast<int>(to_integer(v, w));
    };
    t["initial"] = [](RunConfig& c, const std::string& v, const std::string& w) {
      if (v != "eigen" && v != "random" && v != "zero")
        throw ValidationError(w + ": initial must be eigen, random or zero");
      c.initial = v;
    };
    t["excitation_mode"] = [](RunConfig& c, const std::string& v, const std::string& w) {
      c.excitation_mode = static_cast<int>(to_integer(v, w));
    };
    t["method"] = [](RunConfig& c, const std::string& v, const std::string& w) {
      if (v != "pade" && v != "eigen") throw ValidationError(w + ": method must be pade or eigen");
      c.method = v;
    };
    t["lemma_lambdas"] = [](RunConfig& c, const std::string& v, const std::string& w) { c.lemma_lambdas = to_list(v, w); };
    t["lemma_trials"] = [](RunConfig& c, const std::string& v, const std::string& w) {
      c.lemma_trials = static_cast<int>(to_integer(v, w));
    };
    t["fd_grids"] = [](RunConfig& c, const std::string& v, const std::string& w) {
      c.fd_grids.clear();
      for (double x : to_list(v, w)) {
        if (x != static_cast<int>(x)) throw ValidationError(w + ": fd_grids must be integers");
        c.fd_grids.push_back(static_cast<int>(x));
      }
    };
    t["fd_n_low"] = [](RunConfig& c, const std::string& v, const std::string& w) {
      c.fd_n_low = static_cast<int>(to_integer(v, w));
    };
    t["out_dir"] = [](RunConfig& c, const std::string& v, const std::string&) { c.out_dir = v; };
    t["seed"] = [](RunConfig& c, const std::string& v, const std::string& w) {
      const long long s = to_integer(v, w);
      if (s < 0) throw ValidationError(w + ": seed must be non-negative");
      c.seed = static_cast<std::uint64_t>(s);
    };
    return t;
  }();
  return table;
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& source) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = source + ":" + std::to_string(lineno);
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ValidationError(where + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) throw ValidationError(where + ": unknown key '" + key + "'");
    it->second(cfg, value, where);
  }
  validate_config(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open config file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), path);
}

void validate_config(const RunConfig& cfg) {
  validate_params(cfg.params);
  if (cfg.n_modes < 1) throw ValidationError("n_modes must be at least 1");
  if (cfg.lambda.count < 1 || cfg.time.count < 1) throw ValidationError("grid counts must be at least 1");
  if (!(cfg.lambda.min > 0.0) || cfg.lambda.max < cfg.lambda.min)
    throw ValidationError("lambda grid needs 0 < lambda_min <= lambda_max");
  if (cfg.time.min < 0.0 || cfg.time.max < cfg.time.min) throw ValidationError("time grid needs 0 <= t_start <= t_end");
  if (cfg.time.count > 1 && cfg.time.max == cfg.time.min) throw ValidationError("time grid has zero length");
  for (double a : cfg.alpha_grid)
    if (!(a >= 0.0 && a <= 1.0)) throw ValidationError("alpha_grid entries must lie in [0,1]");
  for (double b : cfg.beta_grid)
    if (!(b >= 0.0 && b <= 1.0)) throw ValidationError("beta_grid entries must lie in [0,1]");
  for (double l : cfg.lemma_lambdas)
    if (!(l > 0.0)) throw ValidationError("lemma_lambdas must be positive");
  if (cfg.lemma_trials < 1) throw ValidationError("lemma_trials must be at least 1");
  if (cfg.excitation_mode < 1 || cfg.excitation_mode > cfg.n_modes)
    throw ValidationError("excitation_mode must lie in [1, n_modes]");
  if (cfg.fd_n_low < 1) throw ValidationError("fd_n_low must be at least 1");
  for (int M : cfg.fd_grids)
    if (M < 8) throw ValidationError("fd_grids entries must be at least 8");
}

}  // namespace nanobeam
