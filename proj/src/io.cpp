#include "ardehali/io.hpp"

#include <cmath>
#include <fstream>

#include "ardehali/qubit_algebra.hpp"

namespace ardehali {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedInput,
                path + ": " + std::string(e.what()));
  }
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::MalformedInput, "cannot write " + path);
  }
  out << j.dump(2) << '\n';
}

json complex_pair(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw Error(ErrorCode::MalformedInput,
                where + ": expected a [re, im] pair");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Vec3 parse_vec3(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) {
    throw Error(ErrorCode::MalformedInput,
                where + ": expected a 3-vector");
  }
  for (const auto& c : j) {
    if (!c.is_number()) {
      throw Error(ErrorCode::MalformedInput,
                  where + ": non-numeric component");
    }
  }
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

}  // namespace

std::string half_power_string(int numerator) {
  if (numerator % 2 == 0) {
    return "2^{" + std::to_string(numerator / 2) + "}";
  }
  return "2^{" + std::to_string(numerator) + "/2}";
}

nlohmann::json state_json(const StateVector& state) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
    amps.push_back(complex_pair(state.amplitudes[i]));
  }
  return json{{"schema_version", kSchemaVersion},
              {"n", state.n},
              {"amplitudes", std::move(amps)}};
}

StateVector parse_state(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("amplitudes") ||
      !j["n"].is_number_integer()) {
    throw Error(ErrorCode::MalformedInput,
                "state file needs integer n and amplitudes");
  }
  StateVector s;
  s.n = j["n"].get<int>();
  if (s.n < 1 || s.n > 30) {
    throw Error(ErrorCode::MalformedInput,
                "n=" + std::to_string(s.n) + " out of range");
  }
  const auto& amps = j["amplitudes"];
  const Eigen::Index dim = Eigen::Index(1) << s.n;
  if (!amps.is_array() || static_cast<Eigen::Index>(amps.size()) != dim) {
    throw Error(ErrorCode::MalformedInput,
                "expected " + std::to_string(dim) + " amplitudes");
  }
  s.amplitudes.resize(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    s.amplitudes[i] = parse_complex(amps[i], "amplitude " + std::to_string(i));
  }
  double norm = s.amplitudes.norm();
  if (std::abs(norm - 1.0) > default_tolerances().state_file_norm) {
    throw Error(ErrorCode::MalformedInput,
                "state norm " + std::to_string(norm) + " is not 1");
  }
  return s;
}

StateVector read_state(const std::string& path) {
  return parse_state(load_json(path));
}

void write_state(const std::string& path, const StateVector& state) {
  save_json(path, state_json(state));
}

nlohmann::json settings_json(const MeasurementSettings& settings) {
  json pairs = json::array();
  for (const auto& [a, ap] : settings.pairs) {
    pairs.push_back(json::array(
        {json::array({a.direction.x(), a.direction.y(), a.direction.z()}),
         json::array(
             {ap.direction.x(), ap.direction.y(), ap.direction.z()})}));
  }
  return json{{"schema_version", kSchemaVersion},
              {"n", settings.n()},
              {"pairs", std::move(pairs)}};
}

MeasurementSettings parse_settings(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("pairs") ||
      !j["n"].is_number_integer()) {
    throw Error(ErrorCode::MalformedInput,
                "settings file needs integer n and pairs");
  }
  int n = j["n"].get<int>();
  const auto& pairs = j["pairs"];
  if (n < 2 || !pairs.is_array() || static_cast<int>(pairs.size()) != n) {
    throw Error(ErrorCode::MalformedInput,
                "expected " + std::to_string(n) + " observable pairs");
  }
  MeasurementSettings s;
  s.pairs.reserve(n);
  for (int k = 0; k < n; ++k) {
    const auto& p = pairs[k];
    if (!p.is_array() || p.size() != 2) {
      throw Error(ErrorCode::MalformedInput,
                  "pair " + std::to_string(k) + ": expected two directions");
    }
    std::string where = "pair " + std::to_string(k);
    try {
      s.pairs.emplace_back(spin_observable(parse_vec3(p[0], where)),
                           spin_observable(parse_vec3(p[1], where)));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NonUnitDirection) {
        throw Error(ErrorCode::MalformedInput, where + ": " + e.what());
      }
      throw;
    }
  }
  return s;
}

MeasurementSettings read_settings(const std::string& path) {
  return parse_settings(load_json(path));
}

void write_settings(const std::string& path,
                    const MeasurementSettings& settings) {
  save_json(path, settings_json(settings));
}

namespace {

json matrix2_json(const Matrix2c& m) {
  return json::array(
      {json::array({complex_pair(m(0, 0)), complex_pair(m(0, 1))}),
       json::array({complex_pair(m(1, 0)), complex_pair(m(1, 1))})});
}

}  // namespace

void write_unitaries(const std::string& path,
                     const std::vector<Matrix2c>& unitaries) {
  json us = json::array();
  for (const auto& u : unitaries) us.push_back(matrix2_json(u));
  save_json(path, json{{"schema_version", kSchemaVersion},
                       {"n", unitaries.size()},
                       {"unitaries", std::move(us)}});
}

nlohmann::json certificate_json(const CertificationReport& report) {
  json cert{{"schema_version", kSchemaVersion},
            {"verdict", verdict_name(report.verdict)},
            {"achieved", report.achieved_value},
            {"bound", report.quantum_bound},
            {"anticommutation", report.anticommutation_residuals},
            {"settings_flipped", report.settings_flipped},
            {"fidelity", report.fidelity}};
  cert["leakage"] = report.ghz_form_leakage
                        ? json(*report.ghz_form_leakage)
                        : json(nullptr);
  if (report.factorization) {
    cert["phases"] =
        json::array({report.factorization->phi, report.factorization->theta});
    json us = json::array();
    for (const auto& u : report.factorization->unitaries) {
      us.push_back(matrix2_json(u));
    }
    cert["unitaries"] = std::move(us);
  } else {
    cert["phases"] = nullptr;
    cert["unitaries"] = nullptr;
  }
  return cert;
}

}  // namespace ardehali
