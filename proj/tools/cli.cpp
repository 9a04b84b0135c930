// Copyright 2026 The rosetta-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "report.hpp"
#include "rosetta_sim.h"

namespace rosetta::cli {
namespace {

constexpr double kPi = std::numbers::pi;

struct RuntimeFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(rsim_status status) {
  if (status != RSIM_OK) throw RuntimeFailure(std::string(rsim_status_string(status)) + ": " + rsim_last_error());
}

struct FockDeleter {
  void operator()(rsim_fock_state* s) const { rsim_fock_free(s); }
};
using FockPtr = std::unique_ptr<rsim_fock_state, FockDeleter>;

struct QubitDeleter {
  void operator()(rsim_qubit_register* r) const { rsim_qubits_free(r); }
};
using QubitPtr = std::unique_ptr<rsim_qubit_register, QubitDeleter>;

FockPtr named_state(rsim_named_state kind, int n) {
  rsim_fock_state* raw = nullptr;
  check(rsim_fock_named(kind, n, &raw));
  return FockPtr(raw);
}

std::vector<double> phase_grid(std::size_t points, double lo, double hi) {
  std::vector<double> grid(points);
  check(rsim_phase_grid(points, lo, hi, grid.data()));
  return grid;
}

nlohmann::ordered_json ket_list(const rsim_fock_state* state) {
  nlohmann::ordered_json kets = nlohmann::ordered_json::array();
  const std::size_t modes = rsim_fock_modes(state);
  std::vector<int> occ(modes);
  for (std::size_t i = 0; i < rsim_fock_num_kets(state); ++i) {
    double re = 0.0, im = 0.0;
    check(rsim_fock_ket(state, i, occ.data(), occ.size(), &re, &im));
    kets.push_back({{"occupation", occ}, {"re", json_number(re)}, {"im", json_number(im)}});
  }
  return kets;
}

const std::map<std::string, rsim_scheme> kSensitivitySchemes = {
    {"separable", RSIM_SCHEME_SEPARABLE}, {"ghz", RSIM_SCHEME_GHZ},
    {"noon", RSIM_SCHEME_NOON},           {"yurke", RSIM_SCHEME_YURKE},
    {"dual-fock", RSIM_SCHEME_DUAL_FOCK}, {"single-fock", RSIM_SCHEME_SINGLE_FOCK},
};

const std::map<std::string, rsim_sampling_scheme> kSamplingSchemes = {
    {"separable", RSIM_SAMPLING_SEPARABLE},
    {"single-fock", RSIM_SAMPLING_SINGLE_FOCK},
    {"noon", RSIM_SAMPLING_NOON},
};

template <class Map>
std::vector<std::string> keys_of(const Map& m) {
  std::vector<std::string> keys;
  for (const auto& kv : m) keys.push_back(kv.first);
  return keys;
}

// ---- commands -----------------------------------------------------------

Report make_report(std::string command, std::vector<std::string> columns) {
  Report r;
  r.command = std::move(command);
  r.columns = std::move(columns);
  return r;
}

Report variance_catalog(int n) {
  rsim_variance_catalog cat{};
  check(rsim_compute_variance_catalog(n, &cat));
  Report r = make_report("variance-catalog", {"state", "variance", "delta_jz", "delta_q"});
  r.summary = {{"photons", static_cast<long long>(n)}};
  const std::pair<const char*, rsim_variance_entry> entries[] = {
      {"uniform", cat.uniform}, {"extreme", cat.extreme}, {"binomial", cat.binomial}};
  for (const auto& [name, e] : entries) {
    r.rows.push_back({std::string(name), e.variance, e.delta_jz, e.delta_q});
    r.extra[name] = {{"variance", json_number(e.variance)},
                     {"delta_jz", json_number(e.delta_jz)},
                     {"delta_q", json_number(e.delta_q)}};
  }
  return r;
}

struct SensitivityArgs {
  std::string scheme;
  int photons = 1;
  std::optional<double> phi;
  std::size_t points = 181;
  double step = 1e-5;
};

Report sensitivity(const SensitivityArgs& a) {
  std::vector<double> grid;
  if (a.phi) {
    grid = {*a.phi};
  } else {
    // Open interval (0, pi): the endpoints are stationary for every scheme.
    for (std::size_t i = 0; i < a.points; ++i) grid.push_back(kPi * (i + 0.5) / static_cast<double>(a.points));
  }
  std::vector<rsim_sensitivity_report> reports(grid.size());
  check(rsim_sensitivity_scan(kSensitivitySchemes.at(a.scheme), a.photons, grid.data(), grid.size(), a.step,
                              reports.data()));

  Report r = make_report("sensitivity", {"phi", "expectation", "std_dev", "derivative", "delta_phi", "divergent"});
  double best = std::numeric_limits<double>::infinity();
  double best_phi = std::numeric_limits<double>::quiet_NaN();
  for (const auto& rep : reports) {
    r.rows.push_back({rep.phi, rep.expectation, rep.std_dev, rep.derivative, rep.delta_phi,
                      static_cast<long long>(rep.divergent)});
    if (!rep.divergent && rep.delta_phi < best) {
      best = rep.delta_phi;
      best_phi = rep.phi;
    }
  }
  r.summary = {{"scheme", a.scheme},
               {"photons", static_cast<long long>(a.photons)},
               {"min_delta_phi", best},
               {"argmin_phi", best_phi},
               {"shot_noise_limit", 1.0 / std::sqrt(a.photons)},
               {"heisenberg_limit", 1.0 / a.photons}};
  return r;
}

Report rosetta(std::size_t points) {
  std::vector<double> phi(points), q(points), mz(points);
  double offset = 0.0, diff = 0.0;
  check(rsim_rosetta_compare(points, phi.data(), q.data(), mz.data(), &offset, &diff));
  Report r = make_report("rosetta", {"phi", "qubit_circuit", "mach_zehnder"});
  for (std::size_t i = 0; i < points; ++i) r.rows.push_back({phi[i], q[i], mz[i]});
  r.summary = {{"offset", offset}, {"max_abs_difference", diff}};
  return r;
}

Report ghz(int n, std::size_t points) {
  const auto grid = phase_grid(points, 0.0, 2 * kPi);
  Report r = make_report("ghz", {"phi", "expect_an"});
  for (double phi : grid) {
    rsim_qubit_register* raw = nullptr;
    check(rsim_qubits_ghz(static_cast<std::size_t>(n), &raw));
    QubitPtr reg(raw);
    for (int q = 0; q < n; ++q) check(rsim_qubits_phase(reg.get(), static_cast<std::size_t>(q), phi));
    double an = 0.0;
    check(rsim_qubits_expect_an(reg.get(), &an));
    r.rows.push_back({phi, an});
  }
  const double op = kPi / (2.0 * n);
  rsim_sensitivity_report rep{};
  check(rsim_sensitivity(RSIM_SCHEME_GHZ, n, op, 0.0, &rep));
  r.summary = {{"photons", static_cast<long long>(n)},
               {"operating_phi", op},
               {"delta_phi", rep.delta_phi},
               {"heisenberg_limit", 1.0 / n}};
  return r;
}

Report hom() {
  rsim_fock_state* raw = nullptr;
  check(rsim_hom_entangle(&raw));
  FockPtr out(raw);
  const FockPtr target = named_state(RSIM_STATE_NOON, 2);
  double fidelity = 0.0;
  check(rsim_fock_fidelity(out.get(), target.get(), &fidelity));

  Report r = make_report("hom", {"n0", "n1", "re", "im", "probability"});
  double coincidence = 0.0;
  int occ[2];
  for (std::size_t i = 0; i < rsim_fock_num_kets(out.get()); ++i) {
    double re = 0.0, im = 0.0;
    check(rsim_fock_ket(out.get(), i, occ, 2, &re, &im));
    const double p = re * re + im * im;
    if (occ[0] == 1 && occ[1] == 1) coincidence += p;
    r.rows.push_back({static_cast<long long>(occ[0]), static_cast<long long>(occ[1]), re, im, p});
  }
  r.summary = {{"coincidence_probability", coincidence}, {"fidelity_noon2", fidelity}};
  return r;
}

Report lithography(int n, std::size_t points, bool uncorrelated) {
  const auto grid = phase_grid(points, 0.0, 2 * kPi);
  const FockPtr state = named_state(RSIM_STATE_NOON, uncorrelated ? 1 : n);
  std::vector<double> rate(points);
  check(rsim_deposition_rate(state.get(), grid.data(), points, nullptr, rate.data()));
  // Independent single-photon exposures multiply.
  if (uncorrelated) {
    for (double& v : rate) v = std::pow(v, n);
  }
  double period = 0.0;
  std::size_t maxima = 0;
  check(rsim_fringe_analysis(grid.data(), rate.data(), points, &period, &maxima));

  Report r = make_report("lithography", {"phi", "rate"});
  for (std::size_t i = 0; i < points; ++i) r.rows.push_back({grid[i], rate[i]});
  r.summary = {{"photons", static_cast<long long>(n)},
               {"source", std::string(uncorrelated ? "uncorrelated" : "noon")},
               {"period", period},
               {"maxima", static_cast<long long>(maxima)}};
  return r;
}

Report peel_off(int n, std::optional<double> r2_opt, bool optimize) {
  const double r2 = r2_opt.value_or(n > 0 ? 1.0 / n : 0.0);
  rsim_peel_off_result res{};
  rsim_fock_state* raw = nullptr;
  check(rsim_peel_off(n, r2, &res, &raw));
  FockPtr conditional(raw);

  Report r = make_report("peel-off", {"photons", "reflectivity_r2", "success_probability", "amplitude_A", "closed_form_probability",
            "residual_fidelity"});
  std::vector<Cell> row{static_cast<long long>(res.photons), res.reflectivity_r2, res.success_probability,
                        res.amplitude_A, res.closed_form_probability, res.residual_fidelity};
  if (optimize) {
    rsim_optimal_reflectivity opt{};
    check(rsim_optimal_reflectivity_search(n, &opt));
    for (const char* c : {"analytic_r2", "analytic_probability", "numeric_r2", "numeric_probability", "grid_fallback"}) {
      r.columns.push_back(c);
    }
    row.insert(row.end(), {opt.analytic_r2, opt.analytic_probability, opt.numeric_r2, opt.numeric_probability,
                           static_cast<long long>(opt.grid_fallback)});
  }
  r.rows.push_back(std::move(row));
  r.flat = true;
  r.extra["conditional_state"] = ket_list(conditional.get());
  return r;
}

struct ScalingArgs {
  std::string scheme;
  std::vector<int> photons;
  int trials = 100;
  int repetitions = 10000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
};

Report scaling(const ScalingArgs& a) {
  std::vector<int> ns = a.photons;
  if (ns.empty()) ns = a.scheme == "noon" ? std::vector<int>{2, 4, 8, 16} : std::vector<int>{1, 2, 4, 8, 16};
  rsim_trial_config cfg{};
  cfg.trials = a.trials;
  cfg.repetitions = a.repetitions;
  cfg.seed = a.seed;
  cfg.workers = a.workers;
  std::vector<double> dphi(ns.size());
  double exponent = 0.0, stderr_ = 0.0;
  check(rsim_scaling_experiment(kSamplingSchemes.at(a.scheme), ns.data(), ns.size(), &cfg, dphi.data(), &exponent,
                                &stderr_));
  Report r = make_report("scaling", {"N", "delta_phi"});
  for (std::size_t i = 0; i < ns.size(); ++i) r.rows.push_back({static_cast<long long>(ns[i]), dphi[i]});
  r.summary = {{"scheme", a.scheme},
               {"trials", static_cast<long long>(a.trials)},
               {"repetitions", static_cast<long long>(a.repetitions)},
               {"seed", static_cast<long long>(a.seed)},
               {"exponent_stderr", stderr_},
               {"exponent", exponent}};
  return r;
}

// ---- plumbing -----------------------------------------------------------

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void apply_basis_cap_from_env() {
  const char* value = std::getenv("ROSETTA_SIM_BASIS_CAP");
  if (value == nullptr || *value == '\0') return;
  const std::string text(value);
  std::size_t cap = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || end != text.data() + text.size() || cap == 0) {
    throw UsageError("ROSETTA_SIM_BASIS_CAP must be a positive integer, got '" + text + "'");
  }
  check(rsim_set_basis_cap(cap));
}

const CLI::Validator kOpenUnit = CLI::Validator(
    [](std::string& s) -> std::string {
      double v = 0.0;
      try {
        v = std::stod(s);
      } catch (const std::exception&) {
        return "not a number: " + s;
      }
      return v > 0.0 && v < 1.0 ? std::string() : "value must lie in (0, 1): " + s;
    },
    "(0,1)");

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deterministic simulator for quantum-enhanced interferometry", "rosetta-sim"};
  app.set_version_flag("--version", std::string(rsim_version()));
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv";
  std::string output_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--output,-o", output_path, "Write to this file instead of standard output");

  int photons = 1;

  auto* cat = app.add_subcommand("variance-catalog", "Jz variances of the uniform, extreme and binomial states");
  cat->add_option("--photons,-N", photons, "Total photon number")->required()->check(CLI::PositiveNumber);

  SensitivityArgs sens;
  auto* sens_cmd = app.add_subcommand("sensitivity", "Linearized phase sensitivity over a phase scan");
  sens_cmd->add_option("--scheme", sens.scheme, "Input scheme")->required()->check(CLI::IsMember(keys_of(kSensitivitySchemes)));
  sens_cmd->add_option("--photons,-N", sens.photons, "Total photon number")->required()->check(CLI::PositiveNumber);
  sens_cmd->add_option("--phi", sens.phi, "Evaluate at a single phase instead of scanning (0, pi)");
  sens_cmd->add_option("--phase-points", sens.points, "Scan points")->check(CLI::Range(1, 1000000))->capture_default_str();
  sens_cmd->add_option("--step", sens.step, "Central-difference step")->check(CLI::Range(1e-12, 0.1))->capture_default_str();

  auto* ros = app.add_subcommand("rosetta", "Qubit-circuit and Mach-Zehnder fringes side by side");
  std::size_t rosetta_points = 101;
  ros->add_option("--phase-points", rosetta_points, "Grid points on [0, 2 pi]")->check(CLI::Range(2, 1000000))->capture_default_str();

  auto* ghz_cmd = app.add_subcommand("ghz", "A_N fringe of the phased GHZ register");
  std::size_t ghz_points = 101;
  ghz_cmd->add_option("--photons,-N", photons, "Number of qubits")->required()->check(CLI::PositiveNumber);
  ghz_cmd->add_option("--phase-points", ghz_points, "Grid points on [0, 2 pi]")->check(CLI::Range(2, 1000000))->capture_default_str();

  auto* hom_cmd = app.add_subcommand("hom", "Hong-Ou-Mandel output of |1,1>");

  auto* litho = app.add_subcommand("lithography", "Normalized N-photon deposition rate");
  std::size_t litho_points = 721;
  bool uncorrelated = false;
  litho->add_option("--photons,-N", photons, "Total photon number")->required()->check(CLI::PositiveNumber);
  litho->add_option("--phase-points", litho_points, "Grid points on [0, 2 pi]")->check(CLI::Range(3, 1000000))->capture_default_str();
  litho->add_flag("--uncorrelated", uncorrelated, "N independent single-photon exposures instead of a NOON state");

  auto* peel = app.add_subcommand("peel-off", "Two-fold coincidence post-selection on |N,N>");
  std::optional<double> reflectivity;
  bool optimize = false;
  peel->add_option("--photons,-N", photons, "Photons per input mode")->required()->check(CLI::Range(2, 1000000));
  peel->add_option("--reflectivity,-r", reflectivity, "Tap reflectivity r^2 (default 1/N)")->check(kOpenUnit);
  peel->add_flag("--optimize", optimize, "Also search for the optimal reflectivity");

  ScalingArgs scal;
  auto* scal_cmd = app.add_subcommand("scaling", "Monte Carlo phase estimation and log-log scaling fit");
  scal_cmd->add_option("--scheme", scal.scheme, "Input scheme")->required()->check(CLI::IsMember(keys_of(kSamplingSchemes)));
  scal_cmd->add_option("--photons-list", scal.photons, "Comma-separated photon numbers")->delimiter(',')->check(CLI::PositiveNumber);
  scal_cmd->add_option("--trials", scal.trials, "Detections per estimate")->check(CLI::PositiveNumber)->capture_default_str();
  scal_cmd->add_option("--repetitions", scal.repetitions, "Estimates per photon number")->check(CLI::Range(2, 100000000))->capture_default_str();
  scal_cmd->add_option("--seed", scal.seed, "Random seed")->capture_default_str();
  scal_cmd->add_option("--workers", scal.workers, "Worker threads (0: all cores)")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  Report report;
  try {
    apply_basis_cap_from_env();
    if (cat->parsed()) {
      report = variance_catalog(photons);
    } else if (sens_cmd->parsed()) {
      report = sensitivity(sens);
    } else if (ros->parsed()) {
      report = rosetta(rosetta_points);
    } else if (ghz_cmd->parsed()) {
      report = ghz(photons, ghz_points);
    } else if (hom_cmd->parsed()) {
      report = hom();
    } else if (litho->parsed()) {
      report = lithography(photons, litho_points, uncorrelated);
    } else if (peel->parsed()) {
      report = peel_off(photons, reflectivity, optimize);
    } else {
      report = scaling(scal);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }

  std::ostringstream rendered;
  write_report(report, format == "json" ? Format::kJson : Format::kCsv, rendered);
  if (output_path.empty()) {
    out << rendered.str();
    return kExitOk;
  }
  std::ofstream file(output_path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << rendered.str()) || !file.flush()) {
    err << "error: cannot write '" << output_path << "'\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace rosetta::cli
