// Command-line front end: period estimates, parameter sweeps, strong-coupling
// limit tables, trajectory dumps, and the acceptance checks.
//
// Exit codes: 0 success, 1 validation failure, 2 usage/config error,
// 3 numerical failure.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nlosc/approx.hpp"
#include "nlosc/models.hpp"
#include "nlosc/numerics.hpp"
#include "nlosc/oracle.hpp"
#include "nlosc/validate.hpp"

namespace {

using nlosc::Family;
using nlosc::ForceModel;
using json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// ---- model/config resolution ----------------------------------------------

struct ModelOptions {
  std::string model;
  std::optional<double> epsilon;
  std::optional<double> omega0;
  std::optional<double> amplitude;
  std::optional<double> rho;
};

struct Resolved {
  ForceModel model = ForceModel::harmonic();
  double amplitude = 1.0;
  bool has_rho = false;
  double rho = 0.0;
};

Family parse_family(const std::string& name) {
  if (name == "harmonic") return Family::Harmonic;
  if (name == "duffing") return Family::Duffing;
  if (name == "signum") return Family::Signum;
  if (name == "quadratic-abs") return Family::QuadraticAbs;
  throw UsageError("unknown model '" + name +
                   "' (expected harmonic|duffing|signum|quadratic-abs)");
}

// Builds the force model and amplitude from the flag set, enforcing the
// rho-first parameterization: --rho means epsilon = 1 with the amplitude
// carrying the nonlinearity (A = sqrt(rho) for duffing, A = rho for
// quadratic-abs), and rho = 0 degenerates to the linear member (epsilon = 0).
Resolved resolve_model(const ModelOptions& opts) {
  const Family family = parse_family(opts.model);
  Resolved r;
  try {
    switch (family) {
      case Family::Harmonic: {
        if (opts.epsilon || opts.omega0) {
          throw UsageError("harmonic takes no --epsilon/--omega0");
        }
        if (opts.rho && *opts.rho != 0.0) {
          throw UsageError("harmonic has rho = 0; give --amplitude instead");
        }
        r.model = ForceModel::harmonic();
        r.amplitude = opts.amplitude.value_or(1.0);
        r.has_rho = true;
        r.rho = 0.0;
        break;
      }
      case Family::Signum: {
        if (opts.rho) throw UsageError("signum has no reduced parameter; give --amplitude");
        if (opts.omega0) throw UsageError("signum takes no --omega0");
        r.model = ForceModel::signum(opts.epsilon.value_or(1.0));
        r.amplitude = opts.amplitude.value_or(1.0);
        r.has_rho = false;
        break;
      }
      case Family::Duffing:
      case Family::QuadraticAbs: {
        if (family == Family::Duffing && opts.omega0) {
          throw UsageError("duffing takes no --omega0 (unit linear frequency)");
        }
        if (static_cast<bool>(opts.rho) == static_cast<bool>(opts.amplitude)) {
          throw UsageError("give exactly one of --rho or --amplitude");
        }
        const double omega0 = opts.omega0.value_or(1.0);
        if (opts.rho) {
          if (opts.epsilon) throw UsageError("--rho fixes epsilon = 1; drop --epsilon");
          const double rho = *opts.rho;
          if (!(rho >= 0.0)) throw UsageError("--rho must be >= 0");
          const double eps = rho == 0.0 ? 0.0 : 1.0;
          if (family == Family::Duffing) {
            r.model = ForceModel::duffing(eps);
            r.amplitude = rho == 0.0 ? 1.0 : std::sqrt(rho);
          } else {
            r.model = ForceModel::quadratic_abs(omega0, eps);
            r.amplitude = rho == 0.0 ? 1.0 : rho;
          }
        } else {
          const double eps = opts.epsilon.value_or(1.0);
          r.model = family == Family::Duffing ? ForceModel::duffing(eps)
                                              : ForceModel::quadratic_abs(omega0, eps);
          r.amplitude = *opts.amplitude;
        }
        r.has_rho = true;
        r.rho = nlosc::reduced_parameter(r.model, r.amplitude);
        break;
      }
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!(std::isfinite(r.amplitude) && r.amplitude > 0.0)) {
    throw UsageError("--amplitude must be > 0");
  }
  return r;
}

// ---- output plumbing -------------------------------------------------------

struct Sink {
  std::ofstream file;
  std::ostream* out = &std::cout;

  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw UsageError("cannot open output file: " + path);
      out = &file;
    }
  }
  std::ostream& stream() { return *out; }
};

void emit_csv(std::ostream& out, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << (i ? "," : "") << header[i];
  }
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << row[i];
    }
    out << "\n";
  }
}

void emit_json(std::ostream& out, const json& value) { out << value.dump(2) << "\n"; }

// ---- period methods --------------------------------------------------------

struct PeriodOutcome {
  double period = 0.0;
  double residual = 0.0;
  std::string anchor;
};

std::string family_anchor(Family family, const char* role) {
  return std::string(nlosc::family_name(family)) + "-" + role;
}

PeriodOutcome compute_period(const Resolved& r, const std::string& method, double tol) {
  const Family family = r.model.family;
  if (method == "first" || method == "second") {
    const nlosc::PeriodResult pr = method == "first"
                                       ? nlosc::first_order_period(r.model, r.amplitude, tol)
                                       : nlosc::second_order_period(r.model, r.amplitude, tol);
    return {pr.period, pr.residual,
            std::string("cosine-trial-") + (method == "first" ? "first" : "second") + "-order"};
  }
  if (method == "closed-first") {
    if (family == Family::Harmonic) return {2.0 * kPi, 0.0, "linear-period"};
    if (family == Family::Duffing) {
      return {nlosc::duffing_T1_closed(r.rho), 0.0, family_anchor(family, "first-order-closed-form")};
    }
    if (family == Family::QuadraticAbs) {
      return {nlosc::quadratic_T1_closed(r.model.omega0, r.rho), 0.0,
              family_anchor(family, "first-order-closed-form")};
    }
    throw UsageError("closed-first is not defined for signum");
  }
  if (method == "polynomial-second") {
    nlosc::EvenPolynomial poly;
    if (family == Family::Duffing) {
      poly = nlosc::duffing_T2_polynomial(r.rho);
    } else if (family == Family::QuadraticAbs) {
      poly = nlosc::quadratic_T2_polynomial(r.model.omega0, r.rho);
    } else {
      throw UsageError("polynomial-second needs duffing or quadratic-abs");
    }
    const double period = nlosc::positive_T_roots(poly).front();
    return {period, std::abs(poly.eval_at_period(period)),
            family_anchor(family, "second-order-polynomial")};
  }
  if (method == "energy") {
    return {nlosc::exact_period_energy(r.model, r.amplitude, tol), 0.0, "energy-integral"};
  }
  if (method == "ode") {
    return {nlosc::period_from_ode(r.model, r.amplitude, tol), 0.0, "ode-integration"};
  }
  throw UsageError("unknown method '" + method +
                   "' (first|second|closed-first|polynomial-second|energy|ode)");
}

// ---- subcommands -----------------------------------------------------------

int cmd_period(const ModelOptions& opts, const std::string& method, double tol,
               const std::string& format, const std::string& output) {
  const Resolved r = resolve_model(opts);
  const PeriodOutcome outcome = compute_period(r, method, tol);
  Sink sink(output);
  if (format == "json") {
    json record;
    record["model"] = nlosc::family_name(r.model.family);
    record["A"] = r.amplitude;
    record["rho"] = r.has_rho ? json(r.rho) : json(nullptr);
    record["method"] = method;
    record["T"] = outcome.period;
    record["residual"] = outcome.residual;
    record["paper_anchor"] = outcome.anchor;
    emit_json(sink.stream(), record);
  } else {
    emit_csv(sink.stream(), {"model", "A", "rho", "method", "T", "residual"},
             {{nlosc::family_name(r.model.family), fmt12(r.amplitude),
               r.has_rho ? fmt12(r.rho) : "nan", method, fmt12(outcome.period),
               fmt12(outcome.residual)}});
  }
  return 0;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3 && parts.size() != 4) {
    throw UsageError("--grid expects lo:hi:npoints[:log]");
  }
  bool log_spaced = false;
  if (parts.size() == 4) {
    if (parts[3] != "log" && parts[3] != "linear") {
      throw UsageError("--grid spacing must be 'log' or 'linear'");
    }
    log_spaced = parts[3] == "log";
  }
  double lo = 0.0, hi = 0.0;
  long n = 0;
  try {
    lo = std::stod(parts[0]);
    hi = std::stod(parts[1]);
    n = std::stol(parts[2]);
  } catch (const std::exception&) {
    throw UsageError("--grid expects numeric lo:hi:npoints[:log]");
  }
  if (n < 1 || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw UsageError("--grid needs hi >= lo and npoints >= 1");
  }
  if (log_spaced && !(lo > 0.0)) throw UsageError("--grid log spacing needs lo > 0");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    if (n == 1) {
      grid.push_back(lo);
    } else if (log_spaced) {
      grid.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    } else {
      grid.push_back(lo + (hi - lo) * static_cast<double>(i) / (n - 1));
    }
  }
  return grid;
}

// One sweep row: closed-form first order, polynomial second order, and the
// energy-integral reference at the same reduced parameter.
struct SweepRow {
  double rho = 0.0;
  double t_first = 0.0, t_second = 0.0, t_exact = 0.0;
  double rel_first = 0.0, rel_second = 0.0;
  bool ok = false;
  std::string error;
};

SweepRow sweep_row(Family family, double rho, double tol) {
  SweepRow row;
  row.rho = rho;
  try {
    if (family == Family::Duffing) {
      row.t_first = nlosc::duffing_T1_closed(rho);
      row.t_second = nlosc::positive_T_roots(nlosc::duffing_T2_polynomial(rho)).front();
      const ForceModel model = ForceModel::duffing(rho == 0.0 ? 0.0 : 1.0);
      row.t_exact = nlosc::exact_period_energy(model, rho == 0.0 ? 1.0 : std::sqrt(rho), tol);
    } else {
      row.t_first = nlosc::quadratic_T1_closed(1.0, rho);
      row.t_second = nlosc::positive_T_roots(nlosc::quadratic_T2_polynomial(1.0, rho)).front();
      const ForceModel model = ForceModel::quadratic_abs(1.0, rho == 0.0 ? 0.0 : 1.0);
      row.t_exact = nlosc::exact_period_energy(model, rho == 0.0 ? 1.0 : rho, tol);
    }
    row.rel_first = std::abs(row.t_first - row.t_exact) / row.t_exact;
    row.rel_second = std::abs(row.t_second - row.t_exact) / row.t_exact;
    row.ok = true;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

int cmd_sweep(const std::string& model_name, const std::string& grid_text, double tol,
              const std::string& format, const std::string& output) {
  const Family family = parse_family(model_name);
  if (family != Family::Duffing && family != Family::QuadraticAbs) {
    throw UsageError("sweep needs a rho-parameterized model: duffing or quadratic-abs");
  }
  const std::vector<double> grid = parse_grid(grid_text);

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  std::size_t failures = 0;
  for (double rho : grid) {
    rows.push_back(sweep_row(family, rho, tol));
    if (!rows.back().ok) {
      ++failures;
      std::cerr << "warning: rho=" << fmt12(rho) << " failed: " << rows.back().error << "\n";
    }
  }
  if (failures == grid.size()) {
    throw std::runtime_error("sweep: every grid point failed");
  }

  Sink sink(output);
  const std::string anchor_first = family_anchor(family, "first-order-closed-form");
  const std::string anchor_second = family_anchor(family, "second-order-polynomial");
  if (format == "json") {
    json records = json::array();
    for (const SweepRow& row : rows) {
      if (!row.ok) continue;
      for (const auto& [method, anchor, t, rel] :
           {std::tuple{"closed-first", anchor_first.c_str(), row.t_first, row.rel_first},
            std::tuple{"polynomial-second", anchor_second.c_str(), row.t_second, row.rel_second},
            std::tuple{"energy", "energy-integral", row.t_exact, 0.0}}) {
        json record;
        record["model"] = nlosc::family_name(family);
        record["rho"] = row.rho;
        record["method"] = method;
        record["T"] = t;
        record["T_exact"] = row.t_exact;
        record["rel_err"] = rel;
        record["paper_anchor"] = anchor;
        records.push_back(record);
      }
    }
    emit_json(sink.stream(), records);
  } else {
    std::vector<std::vector<std::string>> csv_rows;
    for (const SweepRow& row : rows) {
      if (row.ok) {
        csv_rows.push_back({fmt12(row.rho), fmt12(row.t_first), fmt12(row.t_second),
                            fmt12(row.t_exact), fmt12(row.rel_first), fmt12(row.rel_second)});
      } else {
        csv_rows.push_back({fmt12(row.rho), "nan", "nan", "nan", "nan", "nan"});
      }
    }
    emit_csv(sink.stream(),
             {"rho", "T_first", "T_second", "T_exact", "rel_err_first", "rel_err_second"},
             csv_rows);
  }
  return 0;
}

int cmd_limit(const std::string& model_name, const std::string& format,
              const std::string& output) {
  const Family family = parse_family(model_name);
  if (family != Family::Duffing && family != Family::QuadraticAbs) {
    throw UsageError("limit needs a rho-parameterized model: duffing or quadratic-abs");
  }
  const bool duffing = family == Family::Duffing;
  const double rho_far = 1e8;

  struct Row {
    const char* method;
    double analytic;
    double numeric;
    std::string anchor;
  };
  std::vector<Row> rows;
  if (duffing) {
    rows.push_back({"first-order", 6.0 * kPi / std::sqrt(7.0),
                    std::sqrt(rho_far) * nlosc::duffing_T1_closed(rho_far),
                    family_anchor(family, "first-order-limit")});
    rows.push_back({"second-order", nlosc::duffing_T2_limit().t_inf,
                    std::sqrt(rho_far) *
                        nlosc::positive_T_roots(nlosc::duffing_T2_polynomial(rho_far)).front(),
                    family_anchor(family, "second-order-limit")});
    rows.push_back({"exact", nlosc::kDuffingLimitRef,
                    nlosc::scaled_limit(family,
                                        [](double rho) {
                                          return nlosc::exact_period_energy(
                                              ForceModel::duffing(1.0), std::sqrt(rho));
                                        }),
                    "energy-integral-limit"});
  } else {
    rows.push_back({"first-order", 8.0 * kPi / std::sqrt(4.0 + kPi * kPi),
                    std::sqrt(rho_far) * nlosc::quadratic_T1_closed(1.0, rho_far),
                    family_anchor(family, "first-order-limit")});
    rows.push_back({"second-order", nlosc::quadratic_T2_limit().t_inf,
                    std::sqrt(rho_far) *
                        nlosc::positive_T_roots(nlosc::quadratic_T2_polynomial(1.0, rho_far))
                            .front(),
                    family_anchor(family, "second-order-limit")});
    rows.push_back({"exact", nlosc::kQuadraticLimitRef,
                    nlosc::scaled_limit(family,
                                        [](double rho) {
                                          return nlosc::exact_period_energy(
                                              ForceModel::quadratic_abs(1.0, 1.0), rho);
                                        }),
                    "energy-integral-limit"});
  }

  bool disagreement = false;
  Sink sink(output);
  if (format == "json") {
    json records = json::array();
    for (const Row& row : rows) {
      json record;
      record["model"] = nlosc::family_name(family);
      record["method"] = row.method;
      record["analytic"] = row.analytic;
      record["numeric"] = row.numeric;
      record["abs_diff"] = std::abs(row.analytic - row.numeric);
      record["paper_anchor"] = row.anchor;
      records.push_back(record);
    }
    emit_json(sink.stream(), records);
  } else {
    std::vector<std::vector<std::string>> csv_rows;
    for (const Row& row : rows) {
      csv_rows.push_back({row.method, fmt12(row.analytic), fmt12(row.numeric),
                          fmt12(std::abs(row.analytic - row.numeric))});
    }
    emit_csv(sink.stream(), {"method", "analytic", "numeric", "abs_diff"}, csv_rows);
  }
  for (const Row& row : rows) {
    if (!(std::abs(row.analytic - row.numeric) <= 1e-4)) {
      disagreement = true;
      std::cerr << "warning: " << nlosc::family_name(family) << " " << row.method
                << " limit: analytic " << fmt12(row.analytic) << " vs numeric "
                << fmt12(row.numeric) << " differ by "
                << fmt12(std::abs(row.analytic - row.numeric)) << " (> 1e-4)\n";
    }
  }
  return disagreement ? 3 : 0;
}

int cmd_trajectory(const ModelOptions& opts, const std::string& method, double t_end,
                   long samples, double tol, const std::string& format,
                   const std::string& output) {
  if (method != "first" && method != "second") {
    throw UsageError("trajectory --method must be first or second");
  }
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw UsageError("--t-end must be > 0");
  if (samples < 2) throw UsageError("--samples must be >= 2");
  const Resolved r = resolve_model(opts);

  const nlosc::PeriodResult pr = method == "first"
                                     ? nlosc::first_order_period(r.model, r.amplitude, tol)
                                     : nlosc::second_order_period(r.model, r.amplitude, tol);
  const double omega = 2.0 * kPi / pr.period;
  const nlosc::TrialFunction trial =
      method == "first" ? nlosc::TrialFunction::first_order(r.amplitude, omega)
                        : nlosc::TrialFunction::second_order(r.amplitude, pr.a2.value(), omega);

  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(samples));
  for (long i = 0; i < samples; ++i) {
    times.push_back(t_end * static_cast<double>(i) / static_cast<double>(samples - 1));
  }
  const std::vector<nlosc::TrajectorySample> ode = nlosc::ode_states_at(r.model, r.amplitude, times, tol);

  Sink sink(output);
  if (format == "json") {
    json records = json::array();
    for (std::size_t i = 0; i < times.size(); ++i) {
      json record;
      record["model"] = nlosc::family_name(r.model.family);
      record["t"] = times[i];
      record["u_trial"] = trial(times[i]);
      record["u_improved"] = nlosc::improve_trajectory(r.model, trial, times[i]);
      record["u_ode"] = ode[i].u;
      record["energy_ode"] = 0.5 * ode[i].v * ode[i].v + nlosc::potential_eval(r.model, ode[i].u);
      record["method"] = method;
      record["paper_anchor"] = "improvement-map";
      records.push_back(record);
    }
    emit_json(sink.stream(), records);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < times.size(); ++i) {
      const double energy = 0.5 * ode[i].v * ode[i].v + nlosc::potential_eval(r.model, ode[i].u);
      rows.push_back({fmt12(times[i]), fmt12(trial(times[i])),
                      fmt12(nlosc::improve_trajectory(r.model, trial, times[i])), fmt12(ode[i].u),
                      fmt12(energy)});
    }
    emit_csv(sink.stream(), {"t", "u_trial", "u_improved", "u_ode", "energy_ode"}, rows);
  }
  return 0;
}

int cmd_validate(const std::string& format, const std::string& output) {
  const std::vector<nlosc::CriterionResult> results = nlosc::run_acceptance();
  Sink sink(output);
  std::size_t passed = 0;
  if (format == "json") {
    json records = json::array();
    for (const auto& r : results) {
      if (r.pass) ++passed;
      records.push_back({{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
    }
    emit_json(sink.stream(), records);
  } else {
    for (const auto& r : results) {
      if (r.pass) ++passed;
      sink.stream() << r.id << (r.pass ? " PASS: " : " FAIL: ") << r.detail << "\n";
    }
    sink.stream() << passed << "/" << results.size() << " criteria passed\n";
  }
  return passed == results.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periods of conservative oscillators u'' + f(u) = 0 via cosine-trial "
               "improvement, with energy-integral and ODE cross-checks"};
  app.require_subcommand(1);

  ModelOptions opts;
  std::string method = "first";
  std::string format = "csv";
  std::string output;
  std::string grid;
  double tol = 1e-10;
  double t_end = 0.0;
  long samples = 129;

  auto add_model_flags = [&](CLI::App* cmd, bool with_method) {
    cmd->add_option("--model", opts.model, "harmonic|duffing|signum|quadratic-abs")->required();
    cmd->add_option("--epsilon", opts.epsilon, "nonlinearity strength");
    cmd->add_option("--omega0", opts.omega0, "linear frequency (quadratic-abs)");
    cmd->add_option("--amplitude", opts.amplitude, "initial displacement A");
    cmd->add_option("--rho", opts.rho, "reduced nonlinearity (fixes epsilon = 1)");
    if (with_method) {
      cmd->add_option("--method", method,
                      "first|second|closed-first|polynomial-second|energy|ode");
    }
    cmd->add_option("--tol", tol, "solver tolerance");
    cmd->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", output, "write to file instead of stdout");
  };

  CLI::App* period = app.add_subcommand("period", "Period of one configuration");
  add_model_flags(period, true);

  CLI::App* sweep = app.add_subcommand("sweep", "Period table over a rho grid");
  std::string sweep_model;
  sweep->add_option("--model", sweep_model, "duffing|quadratic-abs")->required();
  sweep->add_option("--grid", grid, "rho grid lo:hi:npoints[:log]")->required();
  sweep->add_option("--tol", tol, "oracle tolerance");
  sweep->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--output", output, "write to file instead of stdout");

  CLI::App* limit = app.add_subcommand("limit", "Strong-coupling limits: analytic vs numeric");
  std::string limit_model;
  limit->add_option("--model", limit_model, "duffing|quadratic-abs")->required();
  limit->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  limit->add_option("--output", output, "write to file instead of stdout");

  CLI::App* trajectory = app.add_subcommand(
      "trajectory", "Trial, improved, and integrated trajectories on a time grid");
  add_model_flags(trajectory, false);
  trajectory->add_option("--method", method, "trial order: first|second");
  trajectory->add_option("--t-end", t_end, "end time")->required();
  trajectory->add_option("--samples", samples, "number of samples (>= 2)");

  CLI::App* validate = app.add_subcommand("validate", "Run acceptance criteria A1-A11");
  validate->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  validate->add_option("--output", output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (period->parsed()) return cmd_period(opts, method, tol, format, output);
    if (sweep->parsed()) return cmd_sweep(sweep_model, grid, tol, format, output);
    if (limit->parsed()) return cmd_limit(limit_model, format, output);
    if (trajectory->parsed()) {
      return cmd_trajectory(opts, method, t_end, samples, tol, format, output);
    }
    if (validate->parsed()) return cmd_validate(format, output);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
