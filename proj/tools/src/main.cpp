#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hlab/basis.hpp"
#include "hlab/eigensolve.hpp"
#include "hlab/laughlin.hpp"
#include "hlab/operators.hpp"
#include "hlab/parallel.hpp"
#include "hlab/potentials.hpp"
#include "hlab/scattering.hpp"
#include "hlab/twobody.hpp"
#include "hlab/version.hpp"
#include "hlab/yrast.hpp"

#include "config.hpp"
#include "writers.hpp"

namespace hlabtool {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string config_path;
  std::string out_dir = ".";
  unsigned threads = 0;  // 0: machine parallelism
  unsigned long seed = hlab::SolveOptions{}.seed;
  bool print_defaults = false;
};

const std::vector<std::string> kSubcommands = {
    "scatter", "pseudopot", "laughlin", "yrast", "converge", "confine"};

Table potential_defaults() {
  Table t;
  t["kind"] = Value::string("gaussian");
  t["coupling"] = Value::number(1.0);
  t["height"] = Value::number(1.0);
  t["width"] = Value::number(0.5);
  t["support_factor"] = Value::number(3.0);
  t["radius"] = Value::number(1.0);
  t["r"] = Value::numbers({});
  t["v"] = Value::numbers({});
  return t;
}

Config defaults_for(const std::string& sub) {
  Config cfg;
  cfg.sections[""]["subcommand"] = Value::string(sub);
  if (sub == "scatter") {
    cfg.sections["potential"] = potential_defaults();
    Table& t = cfg.sections["scatter"];
    t["dim"] = Value::number(2);
    t["channels"] = Value::numbers({1});
    t["scale"] = Value::number(1.0);
    t["points"] = Value::number(4096);
    t["match_factor"] = Value::number(4.0);
    t["inner_cut"] = Value::number(1e-4);
    t["log_radius_factor"] = Value::number(10.0);
  } else if (sub == "pseudopot") {
    Table& t = cfg.sections["pseudopot"];
    t["particles"] = Value::number(3);
    t["total_momentum"] = Value::number(6);
    t["statistics"] = Value::string("bose");
    t["channel"] = Value::number(1);
    t["count"] = Value::number(6);
  } else if (sub == "laughlin") {
    Table& t = cfg.sections["laughlin"];
    t["particles"] = Value::number(3);
    t["exponent"] = Value::number(2);
    t["channel"] = Value::number(1);
  } else if (sub == "yrast") {
    Table& t = cfg.sections["yrast"];
    t["particles"] = Value::number(3);
    t["channel"] = Value::number(0);
    t["statistics"] = Value::string("bose");
    t["lambda"] = Value::number(0.1);
    t["gamma"] = Value::number(1.0);
    t["l_min"] = Value::number(0);
    t["l_max"] = Value::number(12);
  } else if (sub == "converge") {
    cfg.sections["potential"] = potential_defaults();
    Table& t = cfg.sections["converge"];
    t["channel"] = Value::number(1);
    t["a_list"] = Value::numbers({0.1, 0.05, 0.025});
    t["points"] = Value::number(1024);
  } else if (sub == "confine") {
    Table& t = cfg.sections["confine"];
    t["profile"] = Value::string("harmonic");
    t["frequency"] = Value::number(1.0);
    t["width"] = Value::number(1.0);
    t["strength"] = Value::number(1.0);
    t["u_min"] = Value::number(-8.0);
    t["u_max"] = Value::number(8.0);
    t["points"] = Value::number(2000);
  }
  return cfg;
}

hlab::RadialPotential make_potential(const Config& cfg) {
  const std::string& kind = cfg.get_string("potential", "kind");
  double coupling = cfg.get_number("potential", "coupling");
  hlab::RadialPotential p = [&] {
    if (kind == "hard_core")
      return hlab::RadialPotential::hard_core(
          cfg.get_number("potential", "radius"));
    if (kind == "soft_disc")
      return hlab::RadialPotential::soft_disc(
          cfg.get_number("potential", "height"),
          cfg.get_number("potential", "radius"));
    if (kind == "gaussian")
      return hlab::RadialPotential::gaussian(
          cfg.get_number("potential", "height"),
          cfg.get_number("potential", "width"),
          cfg.get_number("potential", "support_factor"));
    if (kind == "tabulated")
      return hlab::RadialPotential::tabulated(cfg.get_list("potential", "r"),
                                              cfg.get_list("potential", "v"));
    throw ConfigError("[potential] kind must be hard_core, soft_disc, "
                      "gaussian, or tabulated");
  }();
  return coupling == 1.0 ? p : p.with_coupling(coupling);
}

hlab::Statistics parse_statistics(const std::string& s) {
  if (s == "bose") return hlab::Statistics::Bose;
  if (s == "fermi") return hlab::Statistics::Fermi;
  if (s == "none") return hlab::Statistics::None;
  throw ConfigError("statistics must be bose, fermi, or none");
}

int checked_int(double x, const char* what) {
  long n = static_cast<long>(x);
  if (static_cast<double>(n) != x || n < 0)
    throw ConfigError(std::string(what) + " must be a nonnegative integer");
  return static_cast<int>(n);
}

int run_scatter(const Config& cfg, const Options& opt) {
  hlab::RadialPotential pot = make_potential(cfg);
  int dim = static_cast<int>(cfg.get_integer("scatter", "dim"));
  double a = cfg.get_number("scatter", "scale");
  const std::vector<double>& raw = cfg.get_list("scatter", "channels");
  if (raw.empty()) throw ConfigError("[scatter] channels must be nonempty");
  std::vector<int> channels;
  for (double x : raw) channels.push_back(checked_int(x, "channel"));

  hlab::GridSpec grid;
  grid.points = checked_int(cfg.get_number("scatter", "points"), "points");
  grid.match_factor = cfg.get_number("scatter", "match_factor");
  grid.inner_cut = cfg.get_number("scatter", "inner_cut");
  grid.log_radius_factor = cfg.get_number("scatter", "log_radius_factor");

  struct Slot {
    hlab::ScatteringResult res;
    double born = 0.0;
    std::string error;
  };
  std::vector<Slot> slots(channels.size());
  hlab::parallel_for(
      channels.size(),
      [&](std::size_t i) {
        try {
          hlab::ScaledPotential sp(pot, a);
          slots[i].res = hlab::scattering_length(sp, channels[i], dim, grid);
          if (dim == 2 && channels[i] == 0)
            slots[i].born = std::nan("");  // no Born form in the log channel
          else
            slots[i].born = hlab::born_scattering_length(sp, channels[i], dim);
        } catch (const std::exception& e) {
          slots[i].error = e.what();
        }
      },
      opt.threads);

  CsvWriter csv(cfg, {"dim", "ell", "b", "b_born", "variational_energy",
                      "fit_residual"});
  nlohmann::json summary = summary_skeleton("scatter", cfg);
  summary["channels"] = nlohmann::json::array();
  bool any_error = false;
  for (std::size_t i = 0; i < channels.size(); ++i) {
    const Slot& s = slots[i];
    if (!s.error.empty()) {
      any_error = true;
      summary["channels"].push_back(
          {{"ell", channels[i]}, {"error", s.error}});
      continue;
    }
    csv.row({std::to_string(dim), std::to_string(channels[i]), sig17(s.res.b),
             sig17(s.born), sig17(s.res.variational_energy),
             sig17(s.res.fit_residual)});
    summary["channels"].push_back({{"ell", channels[i]},
                                   {"b", s.res.b},
                                   {"b_born", sig17(s.born)},
                                   {"variational_energy",
                                    s.res.variational_energy},
                                   {"fit_residual", s.res.fit_residual},
                                   {"matching_radius", s.res.matching_radius},
                                   {"degenerate", s.res.degenerate}});
  }
  summary["partial"] = any_error;
  csv.write(fs::path(opt.out_dir) / "scatter.csv");
  write_json(fs::path(opt.out_dir) / "scatter_summary.json", summary);
  return any_error ? 3 : 0;
}

int run_pseudopot(const Config& cfg, const Options& opt) {
  int N = checked_int(cfg.get_number("pseudopot", "particles"), "particles");
  long L = cfg.get_integer("pseudopot", "total_momentum");
  hlab::Statistics stats =
      parse_statistics(cfg.get_string("pseudopot", "statistics"));
  int channel = checked_int(cfg.get_number("pseudopot", "channel"), "channel");
  int count = checked_int(cfg.get_number("pseudopot", "count"), "count");

  hlab::LLLBasis basis = hlab::build_basis(N, L, stats);
  hlab::OperatorMatrix op = hlab::pseudo_hamiltonian(basis, channel);
  hlab::SolveOptions sopt;
  sopt.seed = opt.seed;
  hlab::Spectrum sp = hlab::spectrum(op, count, sopt);

  nlohmann::json summary = summary_skeleton("pseudopot", cfg);
  summary["dimension"] = basis.size();
  summary["nonzeros"] = static_cast<long>(op.mat.nonZeros());
  double max_abs = 0.0;
  for (int k = 0; k < op.mat.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(op.mat, k); it; ++it)
      max_abs = std::max(max_abs, std::abs(it.value()));
  summary["max_abs"] = max_abs;
  summary["kernel_dimension"] = hlab::kernel_dimension(op);
  summary["eigenvalues"] = nlohmann::json::array();
  for (int i = 0; i < sp.values.size(); ++i)
    summary["eigenvalues"].push_back(sp.values[i]);
  write_json(fs::path(opt.out_dir) / "pseudopot_summary.json", summary);
  return 0;
}

int run_laughlin(const Config& cfg, const Options& opt) {
  int N = checked_int(cfg.get_number("laughlin", "particles"), "particles");
  int m = checked_int(cfg.get_number("laughlin", "exponent"), "exponent");
  int channel = checked_int(cfg.get_number("laughlin", "channel"), "channel");
  if (m < 1) throw ConfigError("[laughlin] exponent must be positive");

  long L = static_cast<long>(m) * N * (N - 1) / 2;
  hlab::Statistics stats =
      m % 2 == 0 ? hlab::Statistics::Bose : hlab::Statistics::Fermi;
  hlab::LLLBasis basis = hlab::build_basis(N, L, stats);
  Eigen::VectorXd psi = hlab::laughlin_vector(N, m, basis);
  hlab::OperatorMatrix h = hlab::pseudo_hamiltonian(basis, channel);
  double residual = (h.mat * psi).norm();

  nlohmann::json summary = summary_skeleton("laughlin", cfg);
  summary["residual"] = residual;
  summary["dimension"] = basis.size();
  summary["total_momentum"] = L;
  summary["statistics"] = m % 2 == 0 ? "bose" : "fermi";
  write_json(fs::path(opt.out_dir) / "laughlin_summary.json", summary);
  return 0;
}

int run_yrast(const Config& cfg, const Options& opt) {
  int N = checked_int(cfg.get_number("yrast", "particles"), "particles");
  int channel = checked_int(cfg.get_number("yrast", "channel"), "channel");
  hlab::Statistics stats =
      parse_statistics(cfg.get_string("yrast", "statistics"));
  double lambda = cfg.get_number("yrast", "lambda");
  double gamma = cfg.get_number("yrast", "gamma");
  long l_min = cfg.get_integer("yrast", "l_min");
  long l_max = cfg.get_integer("yrast", "l_max");

  hlab::YrastCurve curve =
      hlab::yrast_scan(N, channel, stats, l_min, l_max, lambda, gamma);
  long laughlin_L = static_cast<long>(curve.laughlin_m) * N * (N - 1) / 2;

  CsvWriter csv(cfg, {"L", "E_min", "overlap"});
  for (const auto& pt : curve.points) {
    double overlap =
        pt.L == laughlin_L ? curve.overlap_with_laughlin : 0.0;
    csv.row({std::to_string(pt.L), sig17(pt.energy), sig17(overlap)});
  }
  csv.write(fs::path(opt.out_dir) / "yrast.csv");

  nlohmann::json summary = summary_skeleton("yrast", cfg);
  summary["ground_L"] = curve.ground_L;
  summary["laughlin_m"] = curve.laughlin_m;
  summary["laughlin_L"] = laughlin_L;
  summary["overlap_with_laughlin"] = curve.overlap_with_laughlin;
  write_json(fs::path(opt.out_dir) / "yrast_summary.json", summary);
  return 0;
}

int run_converge(const Config& cfg, const Options& opt) {
  hlab::RadialPotential pot = make_potential(cfg);
  if (pot.is_zero())
    throw ConfigError("zero potential has no convergence study");
  int channel = checked_int(cfg.get_number("converge", "channel"), "channel");
  const std::vector<double>& a_list = cfg.get_list("converge", "a_list");
  if (a_list.empty()) throw ConfigError("[converge] a_list must be nonempty");
  for (std::size_t i = 0; i < a_list.size(); ++i) {
    if (!(a_list[i] > 0.0 && a_list[i] <= 0.25))
      throw ConfigError("[converge] scales must lie in (0, 0.25]");
    if (i > 0 && !(a_list[i] < a_list[i - 1]))
      throw ConfigError("[converge] scales must strictly decrease");
  }
  hlab::TwoBodyGrid grid;
  grid.points = checked_int(cfg.get_number("converge", "points"), "points");

  double predicted = hlab::limit_prediction(pot, channel);
  std::vector<hlab::ConvergenceRow> rows(a_list.size());
  std::vector<std::string> row_errors(a_list.size());
  hlab::parallel_for(
      a_list.size(),
      [&](std::size_t i) {
        try {
          rows[i].a = a_list[i];
          rows[i].energy =
              hlab::sector_ground_energy(pot, a_list[i], channel, grid);
          rows[i].scaled =
              channel >= 1
                  ? rows[i].energy / std::pow(a_list[i], 2 * channel)
                  : std::log(1.0 / (a_list[i] * a_list[i])) * rows[i].energy;
        } catch (const std::exception& e) {
          row_errors[i] = e.what();
        }
      },
      opt.threads);

  // A failed solve truncates the study: rows past the first failure are
  // dropped so the output always holds a consistent completed prefix.
  std::string abort_reason;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!row_errors[i].empty()) {
      abort_reason = row_errors[i];
      rows.resize(i);
      break;
    }
  }

  // Geometric-sequence extrapolation from the last three rows, matching
  // convergence_study.
  double extrapolated = rows.empty() ? 0.0 : rows.back().scaled;
  if (rows.size() >= 3) {
    double s1 = rows[rows.size() - 3].scaled;
    double s2 = rows[rows.size() - 2].scaled;
    double s3 = rows[rows.size() - 1].scaled;
    if (s2 != s1) {
      double rho = (s3 - s2) / (s2 - s1);
      if (std::abs(rho) < 1.0)
        extrapolated = s3 + (s3 - s2) * rho / (1.0 - rho);
    }
  }

  CsvWriter csv(cfg, {"a", "E", "scaled", "predicted_limit", "relative_gap"});
  for (const auto& row : rows)
    csv.row({sig17(row.a), sig17(row.energy), sig17(row.scaled),
             sig17(predicted), sig17(row.scaled / predicted - 1.0)});
  csv.write(fs::path(opt.out_dir) / "converge.csv");

  nlohmann::json summary = summary_skeleton("converge", cfg);
  summary["predicted_limit"] = predicted;
  summary["extrapolated"] = extrapolated;
  summary["extrapolated_gap"] = extrapolated / predicted - 1.0;
  summary["rows"] = nlohmann::json::array();
  for (const auto& row : rows)
    summary["rows"].push_back(
        {{"a", row.a}, {"E", row.energy}, {"scaled", row.scaled}});
  summary["partial"] = !abort_reason.empty();
  if (!abort_reason.empty()) summary["error"] = abort_reason;
  write_json(fs::path(opt.out_dir) / "converge_summary.json", summary);
  return abort_reason.empty() ? 0 : 3;
}

int run_confine(const Config& cfg, const Options& opt) {
  const std::string& profile = cfg.get_string("confine", "profile");
  double u_min = cfg.get_number("confine", "u_min");
  double u_max = cfg.get_number("confine", "u_max");
  int points = checked_int(cfg.get_number("confine", "points"), "points");

  std::function<double(double)> V;
  if (profile == "harmonic") {
    double w = cfg.get_number("confine", "frequency");
    V = [w](double u) { return w * w * u * u; };
  } else if (profile == "box") {
    double width = cfg.get_number("confine", "width");
    if (!(width > 0.0)) throw ConfigError("[confine] width must be positive");
    u_min = 0.0;
    u_max = width;
    V = [](double) { return 0.0; };
  } else if (profile == "quartic") {
    double s = cfg.get_number("confine", "strength");
    V = [s](double u) { return s * u * u * u * u; };
  } else {
    throw ConfigError("[confine] profile must be harmonic, box, or quartic");
  }

  hlab::ConfinementProfile prof =
      hlab::confinement_ground_state(V, u_min, u_max, points);

  nlohmann::json summary = summary_skeleton("confine", cfg);
  summary["energy"] = prof.energy;
  summary["quartic_integral"] = prof.quartic_integral;
  write_json(fs::path(opt.out_dir) / "confine_summary.json", summary);
  return 0;
}

int dispatch(const std::string& sub, const Config& cfg, const Options& opt) {
  if (sub == "scatter") return run_scatter(cfg, opt);
  if (sub == "pseudopot") return run_pseudopot(cfg, opt);
  if (sub == "laughlin") return run_laughlin(cfg, opt);
  if (sub == "yrast") return run_yrast(cfg, opt);
  if (sub == "converge") return run_converge(cfg, opt);
  return run_confine(cfg, opt);
}

void write_error_record(const Options& opt, const std::string& sub,
                        const std::string& message, int code) {
  try {
    nlohmann::json j;
    j["artifact_version"] = hlab::version;
    j["subcommand"] = sub;
    j["error"] = message;
    j["exit_code"] = code;
    write_json(fs::path(opt.out_dir) / "error.json", j);
  } catch (...) {
    // stderr already carries the message
  }
}

}  // namespace
}  // namespace hlabtool

int main(int argc, char** argv) {
  using namespace hlabtool;

  CLI::App app{"LLL pseudo-potential laboratory: scattering lengths, "
               "contact pair Hamiltonians, and convergence studies"};
  app.require_subcommand(0, 1);
  Options opt;

  auto add_common = [&](CLI::App* a) {
    a->add_option("--config", opt.config_path, "configuration file");
    a->add_option("--out", opt.out_dir, "output directory");
    a->add_option("--threads", opt.threads,
                  "worker threads for sweeps (0: machine parallelism)");
    a->add_option("--seed", opt.seed, "iterative-solver start vector seed");
    a->add_flag("--print-defaults", opt.print_defaults,
                "print the default configuration and exit");
  };
  add_common(&app);
  for (const std::string& name : kSubcommands)
    add_common(app.add_subcommand(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string sub;
  for (const std::string& name : kSubcommands)
    if (app.got_subcommand(name)) sub = name;

  if (opt.print_defaults) {
    std::string out;
    if (!sub.empty()) {
      out = defaults_for(sub).render();
    } else {
      for (const std::string& name : kSubcommands) {
        if (!out.empty()) out += "\n";
        out += defaults_for(name).render();
      }
    }
    std::fputs(out.c_str(), stdout);
    return 0;
  }
  if (sub.empty()) {
    std::cerr << app.help();
    return 2;
  }

  Config cfg = defaults_for(sub);
  try {
    if (!opt.config_path.empty())
      cfg.overlay(parse_config_file(opt.config_path));
    if (cfg.get_string("", "subcommand") != sub)
      throw ConfigError("config subcommand does not match the invoked one");
    return dispatch(sub, cfg, opt);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    write_error_record(opt, sub, e.what(), 2);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    write_error_record(opt, sub, e.what(), 2);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    write_error_record(opt, sub, e.what(), 3);
    return 3;
  }
}
