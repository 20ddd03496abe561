// landau-lab: experiment runner for the damped dispersive propagator family.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "landau/constructions.hpp"
#include "landau/io.hpp"
#include "landau/propagator.hpp"
#include "landau/rates.hpp"
#include "landau/sobolev.hpp"
#include "landau/spectral.hpp"

namespace {

using namespace landau;

constexpr const char* kVersion = "0.1.0";
const double kQuarterRatio = std::pow(2.0, -0.25);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string fmt(double v) { return format_double(v); }

// Merged parameter map: defaults, then config file, then explicit flags.
class Params {
 public:
  Params(std::map<std::string, std::string> defaults,
         const std::optional<std::string>& config_path,
         std::map<std::string, std::string> flag_values,
         const std::set<std::string>& known)
      : values_(std::move(defaults)) {
    if (config_path) {
      const Config file = load_config_file(*config_path);
      for (const auto& [key, value] : file.values) {
        if (!known.count(key) && key != "command" && key != "version")
          throw std::invalid_argument("unknown parameter: " + key);
        values_[key] = value;
      }
    }
    for (auto& [key, value] : flag_values) values_[key] = std::move(value);
  }

  double number(const std::string& key) const {
    const std::string& raw = text(key);
    try {
      std::size_t used = 0;
      const double v = std::stod(raw, &used);
      if (used != raw.size()) throw std::invalid_argument(raw);
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("parameter " + key + " is not a number: " +
                                  raw);
    }
  }

  int integer(const std::string& key) const {
    return static_cast<int>(std::llround(number(key)));
  }

  const std::string& text(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end())
      throw std::invalid_argument("missing parameter: " + key);
    return it->second;
  }

  const std::map<std::string, std::string>& all() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

SpectralFunction make_data(const Params& p) {
  const std::string& name = p.text("data");
  if (name == "gaussian") return SpectralFunction::gaussian(1.0, 0.5);
  if (name == "indicator") {
    const double R = p.number("R");
    require(R > 0.0, "R must be positive");
    return SpectralFunction::interval_indicator(R, R + 1.0);
  }
  if (name == "bump") return SpectralFunction::scaled_bump(1.0, 1.0, 0.0);
  if (name == "ftheta")
    return f_theta(CounterexampleSpec(p.number("theta"), p.number("a"),
                                      p.number("gamma")));
  throw std::invalid_argument("unknown data catalog entry: " + name);
}

TimeGrid make_tgrid(const Params& p) {
  const double t_max = p.number("t-max");
  const double t_min = p.number("t-min");
  const double ratio = p.number("ratio");
  require(t_max > 0.0 && t_max <= 1.0, "t-max must lie in (0, 1]");
  require(t_min > 0.0 && t_min <= t_max, "t-min must lie in (0, t-max]");
  require(ratio > 0.0 && ratio < 1.0, "ratio must lie in (0, 1)");
  return TimeGrid::geometric(t_max, t_min, ratio);
}

SpatialGrid make_grid(const Params& p) {
  return {p.number("x-center"), p.number("x-half-width"),
          p.integer("x-points")};
}

HoelderCurve make_curve(const Params& p) {
  const std::string& kind = p.text("curve");
  if (kind == "vertical") return HoelderCurve::vertical(0.0, 4.0);
  if (kind == "power-shift") {
    const double beta = p.number("beta");
    require(beta > 0.0 && beta <= 1.0, "beta must lie in (0, 1]");
    return HoelderCurve::power_shift(beta, 0.0, 4.0);
  }
  throw std::invalid_argument("unknown curve kind: " + kind);
}

void validate_common(const Params& p) {
  if (p.all().count("a")) require(p.number("a") > 0.0, "a must be positive");
  if (p.all().count("gamma"))
    require(p.number("gamma") > 0.0, "gamma must be positive");
}

std::string render(const Params& p, const std::string& command,
                   const Table& table, const std::string& format) {
  Config meta;
  meta.values = p.all();
  meta.values["command"] = command;
  meta.values["version"] = kVersion;
  if (format == "csv") {
    std::string out;
    for (const auto& [key, value] : meta.values)
      out += "# " + key + " = " + value + "\n";
    out += csv_row(table.columns);
    for (const auto& row : table.rows) out += csv_row(row);
    return out;
  }
  if (format == "json") {
    nlohmann::json j;
    j["meta"] = meta.values;
    j["columns"] = table.columns;
    auto& rows = j["rows"] = nlohmann::json::array();
    for (const auto& row : table.rows) {
      nlohmann::json jr = nlohmann::json::array();
      for (const std::string& cell : row) {
        try {
          std::size_t used = 0;
          const double v = std::stod(cell, &used);
          if (used == cell.size()) {
            jr.push_back(v);
            continue;
          }
        } catch (const std::exception&) {
        }
        jr.push_back(cell);
      }
      rows.push_back(std::move(jr));
    }
    return j.dump(2) + "\n";
  }
  throw std::invalid_argument("format must be csv or json");
}

void emit(const Params& p, const std::string& command, const Table& table) {
  const std::string text = render(p, command, table, p.text("format"));
  const std::string& out = p.text("out");
  if (out.empty()) {
    std::cout << text;
  } else {
    atomic_write(out, text);
  }
}

Table run_propagate(const Params& p) {
  validate_common(p);
  const SpectralFunction spec = make_data(p);
  const SpatialGrid grid = make_grid(p);
  const TimeGrid tgrid = make_tgrid(p);
  const double a = p.number("a"), gamma = p.number("gamma");
  Table t{{"x", "t", "re", "im"}, {}};
  for (double tv : tgrid.values) {
    const GridFunction g = propagate_grid(spec, grid, {a, gamma, tv});
    for (int i = 0; i < grid.n_points; ++i)
      t.rows.push_back({fmt(grid.x(i)), fmt(tv), fmt(g.values[i].real()),
                        fmt(g.values[i].imag())});
  }
  return t;
}

Table run_maximal(const Params& p) {
  validate_common(p);
  const SpectralFunction spec = make_data(p);
  const SpatialGrid grid = make_grid(p);
  const TimeGrid tgrid = make_tgrid(p);
  const double a = p.number("a"), gamma = p.number("gamma");
  Table t{{"x", "maximal"}, {}};
  for (int i = 0; i < grid.n_points; ++i) {
    const double x = grid.x(i);
    t.rows.push_back({fmt(x), fmt(maximal(spec, x, tgrid, a, gamma))});
  }
  return t;
}

Table run_rate(const Params& p, const std::string& out_path) {
  validate_common(p);
  const SpectralFunction spec = make_data(p);
  const HoelderCurve curve = make_curve(p);
  const double a = p.number("a"), gamma = p.number("gamma");
  const TimeGrid tgrid = make_tgrid(p);

  // pre-screen x samples so the limit functional is bounded away from zero
  const std::optional<double> beta =
      curve.kind == HoelderCurve::Kind::vertical
          ? std::nullopt
          : std::optional<double>(curve.beta);
  std::vector<double> xs;
  for (double cand : {0.1, 0.2, 0.3, 0.5, 0.7, 0.9, 1.3, 1.6}) {
    if (std::abs(limit_functional(spec, cand, beta, gamma, a)) > 1e-6)
      xs.push_back(cand);
    if (xs.size() == 5) break;
  }
  require(!xs.empty(), "no x sample passed the limit-functional screen");

  const RateExperiment exp =
      make_experiment(spec, curve, a, gamma, tgrid, xs);
  const std::vector<RateRow> rows = rate_report(exp);

  Table t{{"x", "slope", "intercept", "r2", "predicted_h", "o_consistent"},
          {}};
  for (const RateRow& r : rows)
    t.rows.push_back({fmt(r.x), fmt(r.fit.slope), fmt(r.fit.intercept),
                      fmt(r.fit.r_squared), fmt(r.predicted_h),
                      r.o_consistent ? "1" : "0"});

  if (!out_path.empty()) {
    // long-format companion for external plotting
    std::string companion = "x,t,err\n";
    for (double x : xs)
      for (const auto& [tv, err] : error_samples(exp, x))
        companion += csv_row({fmt(x), fmt(tv), fmt(err)});
    atomic_write(out_path + ".samples.csv", companion);
  }
  return t;
}

Table run_counterexample(const Params& p) {
  validate_common(p);
  const CounterexampleSpec spec(p.number("theta"), p.number("a"),
                                p.number("gamma"));
  const CounterexampleReport rep = counterexample_sweep(spec);
  Table t{{"theta", "x", "t_pinned", "phi_max", "psi_max", "maximal",
           "f_theta_abs"},
          {}};
  for (const CounterexampleRow& r : rep.rows)
    t.rows.push_back({fmt(spec.theta), fmt(r.x), fmt(r.t_pinned),
                      fmt(r.phi_max), fmt(r.psi_max), fmt(r.maximal),
                      fmt(r.f_theta_abs)});
  return t;
}

Table run_sharpness(const Params& p) {
  validate_common(p);
  const double R = p.number("R");
  require(R > 0.0, "R must be positive");
  const SharpnessSpec spec(R, p.number("a"), p.number("gamma"));
  double first_order_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 11; ++i) {
    const double x = -0.0009 + 0.00018 * i;
    first_order_min =
        std::min(first_order_min, std::abs(first_order_integral(x, spec)));
  }
  Table t{{"R", "a", "gamma", "t0", "first_order_min", "tail"}, {}};
  t.rows.push_back({fmt(spec.R), fmt(spec.a), fmt(spec.gamma), fmt(spec.t0),
                    fmt(first_order_min), fmt(taylor_tail_bound(spec))});
  return t;
}

Table run_sobolev(const Params& p) {
  const double s = p.number("s"), pp = p.number("p");
  require(s > 0.0, "s must be positive");
  require(pp > 1.0 && pp <= 2.0, "p must lie in (1, 2]");
  const std::string& name = p.text("data");
  CatalogEntry entry = [&] {
    if (name == "gaussian") return CatalogEntry::gaussian(1.0, 1.0, 0.0);
    if (name == "bump") return CatalogEntry::bump_translate(0.0);
    throw std::invalid_argument("unknown sobolev catalog entry: " + name);
  }();
  const double wsp = wsp_norm(entry, s, pp);
  const double fourier = fourier_weighted_norm(entry, s, pp);
  Table t{{"entry", "s", "p", "wsp", "fourier", "ratio"}, {}};
  t.rows.push_back(
      {name, fmt(s), fmt(pp), fmt(wsp), fmt(fourier), fmt(fourier / wsp)});
  return t;
}

Table run_lp_decompose(const Params& p) {
  const SpectralFunction spec = make_data(p);
  const int k_max = p.integer("k-max");
  const std::vector<DyadicPiece> pieces = lp_decompose(spec, k_max);
  Table t{{"k", "scale", "support_lo", "support_hi", "peak"}, {}};
  for (const DyadicPiece& piece : pieces) {
    const Interval h = piece.spectrum.hull();
    double peak = 0.0;
    for (int i = 0; i <= 200; ++i) {
      const double xi = h.lo + (h.hi - h.lo) * i / 200.0;
      peak = std::max(peak, std::abs(piece.spectrum(xi)));
    }
    t.rows.push_back({std::to_string(piece.k), fmt(piece.scale), fmt(h.lo),
                      fmt(h.hi), fmt(peak)});
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Experiment runner for the damped dispersive propagator "
               "P^t: multiplier exp(i t |xi|^a - t^gamma |xi|^a)"};
  app.require_subcommand(1);

  struct Flags {
    std::optional<double> a, gamma, t_min, t_max, ratio, beta, theta, R, s, p;
    std::optional<std::string> data, curve;
    std::string out;
    std::string format = "csv";
    std::optional<std::string> config;
    std::optional<int> k_max;
  } flags;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--a", flags.a);
    cmd->add_option("--gamma", flags.gamma);
    cmd->add_option("--t-min", flags.t_min);
    cmd->add_option("--t-max", flags.t_max);
    cmd->add_option("--ratio", flags.ratio);
    cmd->add_option("--beta", flags.beta);
    cmd->add_option("--theta", flags.theta);
    cmd->add_option("--R", flags.R);
    cmd->add_option("--s", flags.s);
    cmd->add_option("--p", flags.p);
    cmd->add_option("--data", flags.data);
    cmd->add_option("--curve", flags.curve);
    cmd->add_option("--out", flags.out);
    cmd->add_option("--format", flags.format);
    cmd->add_option("--config", flags.config);
    cmd->add_option("--k-max", flags.k_max);
  };

  const std::vector<std::string> commands = {
      "propagate", "maximal",  "rate",        "counterexample",
      "sharpness", "sobolev",  "lp-decompose"};
  for (const std::string& name : commands) add_common(app.add_subcommand(name));

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string command = app.get_subcommands().front()->get_name();

    std::map<std::string, std::string> defaults = {
        {"a", "2"},           {"gamma", "2"},
        {"t-min", "1e-6"},    {"t-max", "0.01"},
        {"ratio", fmt(kQuarterRatio)},
        {"theta", fmt(std::pow(2.0, -8.0))},
        {"R", "1000"},        {"s", "0.5"},
        {"p", "1.5"},         {"data", "gaussian"},
        {"curve", "vertical"},{"k-max", "12"},
        {"x-center", "0"},    {"x-half-width", "3"},
        {"x-points", "41"},   {"out", ""},
        {"format", "csv"}};
    if (command == "maximal") {
      defaults["t-max"] = "1";
      defaults["t-min"] = "1e-8";
    }
    if (command == "sobolev") defaults["p"] = "2";

    std::set<std::string> known;
    for (const auto& [key, value] : defaults) known.insert(key);

    std::map<std::string, std::string> flag_values;
    auto put = [&](const char* key, const auto& opt) {
      if (opt) flag_values[key] = fmt(*opt);
    };
    put("a", flags.a);
    put("gamma", flags.gamma);
    put("t-min", flags.t_min);
    put("t-max", flags.t_max);
    put("ratio", flags.ratio);
    put("beta", flags.beta);
    put("theta", flags.theta);
    put("R", flags.R);
    put("s", flags.s);
    put("p", flags.p);
    if (flags.beta) known.insert("beta");
    if (flags.data) flag_values["data"] = *flags.data;
    if (flags.curve) flag_values["curve"] = *flags.curve;
    if (flags.k_max) flag_values["k-max"] = std::to_string(*flags.k_max);
    flag_values["out"] = flags.out;
    flag_values["format"] = flags.format;
    known.insert("beta");

    const Params params(std::move(defaults), flags.config,
                        std::move(flag_values), known);

    Table table;
    if (command == "propagate") table = run_propagate(params);
    else if (command == "maximal") table = run_maximal(params);
    else if (command == "rate") table = run_rate(params, flags.out);
    else if (command == "counterexample") table = run_counterexample(params);
    else if (command == "sharpness") table = run_sharpness(params);
    else if (command == "sobolev") table = run_sobolev(params);
    else if (command == "lp-decompose") table = run_lp_decompose(params);
    emit(params, command, table);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
