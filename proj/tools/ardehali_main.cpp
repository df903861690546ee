#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ardehali/bell_operators.hpp"
#include "ardehali/characterization.hpp"
#include "ardehali/io.hpp"
#include "ardehali/lhv.hpp"
#include "ardehali/qubit_algebra.hpp"
#include "ardehali/random.hpp"
#include "ardehali/see_saw.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitNotMaximal = 3;
constexpr int kExitConditionsViolated = 4;

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) {
      throw ardehali::Error(ardehali::ErrorCode::MalformedInput,
                            "cannot write " + out_path);
    }
    out << j.dump(2) << '\n';
  }
}

int run_bounds(int from, int to, bool as_json) {
  constexpr int kCap = 12;
  if (from < 2 || to < from || to > kCap) {
    std::cerr << "invalid range " << from << ".." << to
              << ": n must satisfy 2 <= n <= " << kCap
              << " (exhaustive enumeration cap)\n";
    return kExitBadInput;
  }
  json rows = json::array();
  for (int n = from; n <= to; ++n) {
    ardehali::BoundsReport r = ardehali::bounds_report(n);
    double ghz_value = ardehali::ardehali_expectation(
        ardehali::ghz_state(n), ardehali::canonical_settings(n));
    bool confirmed =
        double(ardehali::lhv_max(n)) == r.classical_bound;
    int classical_num = n % 2 == 0 ? n : n + 1;
    int factor_num = n % 2 == 0 ? n - 1 : n - 2;
    rows.push_back(
        {{"n", n},
         {"classical_bound", r.classical_bound},
         {"classical_bound_pow2", ardehali::half_power_string(classical_num)},
         {"lhv_confirmed", confirmed},
         {"quantum_bound", r.quantum_bound},
         {"quantum_bound_pow2", ardehali::half_power_string(2 * n - 1)},
         {"ghz_value", ghz_value},
         {"violation_factor", r.violation_factor},
         {"violation_factor_pow2", ardehali::half_power_string(factor_num)}});
  }
  if (as_json) {
    std::cout << json{{"schema_version", ardehali::kSchemaVersion},
                      {"rows", rows}}
                     .dump(2)
              << '\n';
    return kExitOk;
  }
  std::printf("%3s  %-14s  %-18s  %-14s  %-16s  %s\n", "n", "classical",
              "quantum", "ghz", "factor", "lhv");
  for (const auto& row : rows) {
    std::printf("%3d  %-6.10g %-7s  %-10.10g %-7s  %-14.10g  %-8.10g %-7s  %s\n",
                row["n"].get<int>(), row["classical_bound"].get<double>(),
                row["classical_bound_pow2"].get<std::string>().c_str(),
                row["quantum_bound"].get<double>(),
                row["quantum_bound_pow2"].get<std::string>().c_str(),
                row["ghz_value"].get<double>(),
                row["violation_factor"].get<double>(),
                row["violation_factor_pow2"].get<std::string>().c_str(),
                row["lhv_confirmed"].get<bool>() ? "confirmed" : "MISMATCH");
  }
  return kExitOk;
}

int run_certify(const std::string& state_path, const std::string& settings_path,
                bool canonical, double tol, const std::string& out_path) {
  ardehali::StateVector state = ardehali::read_state(state_path);
  ardehali::MeasurementSettings settings =
      canonical ? ardehali::canonical_settings(state.n)
                : ardehali::read_settings(settings_path);
  ardehali::CertificationReport report =
      ardehali::certify_maximal_violation(state, settings, tol);
  emit(ardehali::certificate_json(report), out_path);
  switch (report.verdict) {
    case ardehali::Verdict::Certified:
      return kExitOk;
    case ardehali::Verdict::NotMaximal:
      return kExitNotMaximal;
    case ardehali::Verdict::ConditionsViolated:
      return kExitConditionsViolated;
  }
  return kExitBadInput;
}

int run_optimize(const std::string& state_path, int restarts,
                 std::uint64_t seed, const std::string& out_path) {
  ardehali::StateVector state = ardehali::read_state(state_path);
  ardehali::OptimizationConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;
  ardehali::OptimizationResult result = ardehali::see_saw(state, cfg);
  emit(json{{"schema_version", ardehali::kSchemaVersion},
            {"best_value", result.best_value},
            {"sweeps_used", result.sweeps_used},
            {"converged", result.converged},
            {"settings", ardehali::settings_json(result.best_settings)}},
       out_path);
  return kExitOk;
}

int run_make_state(int ghz_n, int w_n, int lu_n, std::uint64_t seed,
                   const std::string& out_path) {
  if (ghz_n > 0) {
    ardehali::write_state(out_path, ardehali::ghz_state(ghz_n));
    return kExitOk;
  }
  if (w_n > 0) {
    ardehali::write_state(out_path, ardehali::w_state(w_n));
    return kExitOk;
  }
  ardehali::Rng rng(seed);
  std::vector<ardehali::Matrix2c> unitaries;
  unitaries.reserve(lu_n);
  for (int j = 0; j < lu_n; ++j) unitaries.push_back(rng.haar_unitary());

  ardehali::StateVector state = ardehali::ghz_state(lu_n);
  for (int j = 1; j <= lu_n; ++j) {
    state.amplitudes = ardehali::apply_single_qubit(unitaries[j - 1], j,
                                                    state.amplitudes, lu_n);
  }
  ardehali::MeasurementSettings canonical =
      ardehali::canonical_settings(lu_n);
  ardehali::MeasurementSettings rotated;
  rotated.pairs.reserve(lu_n);
  for (int j = 0; j < lu_n; ++j) {
    rotated.pairs.emplace_back(
        ardehali::spin_observable(ardehali::rotate_direction(
            unitaries[j], canonical.pairs[j].first.direction)),
        ardehali::spin_observable(ardehali::rotate_direction(
            unitaries[j], canonical.pairs[j].second.direction)));
  }

  std::string base = out_path;
  if (base.size() > 5 && base.substr(base.size() - 5) == ".json") {
    base = base.substr(0, base.size() - 5);
  }
  ardehali::write_state(out_path, state);
  ardehali::write_unitaries(base + ".unitaries.json", unitaries);
  ardehali::write_settings(base + ".settings.json", rotated);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Bell-Ardehali operators for n qubits: bound tables, see-saw "
      "optimization of measurement settings, and certification that a "
      "maximally violating state is a local-unitary image of GHZ"};
  app.require_subcommand(1);

  auto* bounds = app.add_subcommand(
      "bounds", "Classical/quantum bounds and violation factors per n");
  int from = 2, to = 10;
  bool as_json = false;
  bounds->add_option("--from", from, "First n (>= 2)");
  bounds->add_option("--to", to, "Last n (<= 12)");
  bounds->add_flag("--json", as_json, "Emit machine-readable rows");

  auto* certify = app.add_subcommand(
      "certify", "Certify a state as maximally violating, with unitaries");
  std::string state_path, settings_path, out_path;
  bool canonical = false;
  double tol = 1e-9;
  certify->add_option("state", state_path, "State JSON file")->required();
  auto* opt_settings =
      certify->add_option("--settings", settings_path, "Settings JSON file");
  certify->add_flag("--canonical", canonical, "Use the canonical settings")
      ->excludes(opt_settings);
  certify->add_option("--tol", tol, "Value tolerance (default 1e-9)");
  certify->add_option("--out", out_path, "Certificate path (default stdout)");

  auto* optimize = app.add_subcommand(
      "optimize", "See-saw search for the best measurement settings");
  std::string opt_state_path, opt_out_path;
  int restarts = 20;
  std::uint64_t seed = 0;
  optimize->add_option("state", opt_state_path, "State JSON file")->required();
  optimize->add_option("--restarts", restarts, "Random restarts (default 20)");
  optimize->add_option("--seed", seed, "Generator seed (default 0)");
  optimize->add_option("--out", opt_out_path, "Output path (default stdout)");

  auto* make_state =
      app.add_subcommand("make-state", "Write GHZ, W, or rotated-GHZ states");
  int ghz_n = 0, w_n = 0, lu_n = 0;
  std::uint64_t make_seed = 0;
  std::string make_out = "state.json";
  auto* o_ghz = make_state->add_option("--ghz", ghz_n, "GHZ state of n qubits");
  auto* o_w = make_state->add_option("--w", w_n, "W state of n qubits");
  auto* o_lu = make_state->add_option(
      "--random-lu-ghz", lu_n,
      "Seeded random local-unitary rotation of GHZ, with companion "
      "unitaries/settings files");
  o_ghz->excludes(o_w)->excludes(o_lu);
  o_w->excludes(o_lu);
  make_state->add_option("--seed", make_seed, "Generator seed");
  make_state->add_option("--out", make_out, "State file path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (bounds->parsed()) return run_bounds(from, to, as_json);
    if (certify->parsed()) {
      if (canonical == !settings_path.empty()) {
        std::cerr << "need exactly one of --settings or --canonical\n";
        return kExitBadInput;
      }
      return run_certify(state_path, settings_path, canonical, tol, out_path);
    }
    if (optimize->parsed()) {
      return run_optimize(opt_state_path, restarts, seed, opt_out_path);
    }
    if (make_state->parsed()) {
      if ((ghz_n > 0) + (w_n > 0) + (lu_n > 0) != 1) {
        std::cerr << "need exactly one of --ghz, --w, --random-lu-ghz "
                     "with n >= 2\n";
        return kExitBadInput;
      }
      return run_make_state(ghz_n, w_n, lu_n, make_seed, make_out);
    }
  } catch (const ardehali::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
