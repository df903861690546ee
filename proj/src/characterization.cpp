#include "ardehali/characterization.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ardehali/qubit_algebra.hpp"

namespace ardehali {

namespace {

double wrap_2pi(double x) {
  const double two_pi = 2.0 * std::numbers::pi;
  x = std::fmod(x, two_pi);
  if (x < 0) x += two_pi;
  if (x == two_pi) x = 0.0;
  return x;
}

// Gauge rule: rotate a global phase so the component of largest modulus
// becomes real positive; ties break toward the lower index.
Eigen::Vector2cd gauge_fixed(Eigen::Vector2cd v) {
  int pick = std::abs(v[0]) >= std::abs(v[1]) ? 0 : 1;
  Complex z = v[pick];
  if (std::abs(z) > 0) v *= std::conj(z) / std::abs(z);
  return v;
}

// Closed-form eigenvectors of d . sigma for a (near-)unit direction d,
// branch-selected for stability near the poles.
std::pair<Eigen::Vector2cd, Eigen::Vector2cd> pole_stable_eigenvectors(
    const Vec3& d) {
  Complex xy(d.x(), d.y());
  Eigen::Vector2cd plus, minus;
  if (d.z() >= 0) {
    plus << Complex(1.0 + d.z(), 0), xy;
    minus << -std::conj(xy), Complex(1.0 + d.z(), 0);
  } else {
    plus << std::conj(xy), Complex(1.0 - d.z(), 0);
    minus << Complex(1.0 - d.z(), 0), -xy;
  }
  plus.normalize();
  minus.normalize();
  return {gauge_fixed(plus), gauge_fixed(minus)};
}

}  // namespace

std::vector<double> check_anticommutation(const MeasurementSettings& settings) {
  std::vector<double> out;
  out.reserve(settings.pairs.size());
  for (const auto& [a, ap] : settings.pairs) {
    out.push_back(observable_inner(a, ap));
  }
  return out;
}

double pauli_triple_residual(const SpinObservable& a,
                             const SpinObservable& ap) {
  double inner = observable_inner(a, ap);
  if (std::abs(inner) > 0.1) {
    throw Error(ErrorCode::NotAnticommuting,
                "inner product " + std::to_string(inner) + " exceeds 0.1");
  }
  SpinObservable app = observable_cross(a, ap);
  const Complex i(0, 1);
  const Matrix2c& id = identity2();
  double r = 0.0;
  r = std::max(r, (a.matrix * ap.matrix - i * app.matrix).norm());
  r = std::max(r, (ap.matrix * app.matrix - i * a.matrix).norm());
  r = std::max(r, (app.matrix * a.matrix - i * ap.matrix).norm());
  r = std::max(r, (a.matrix * a.matrix - id).norm());
  r = std::max(r, (ap.matrix * ap.matrix - id).norm());
  r = std::max(r, (app.matrix * app.matrix - id).norm());
  return r;
}

RepresentationBasis build_representation(const MeasurementSettings& settings) {
  RepresentationBasis basis;
  basis.qubits.reserve(settings.pairs.size());
  for (const auto& [a, ap] : settings.pairs) {
    SpinObservable app = observable_cross(a, ap);
    double cross_norm = app.direction.norm();
    if (cross_norm < 1.0 - 1e-6) {
      throw Error(ErrorCode::DegenerateCross,
                  "cross direction norm " + std::to_string(cross_norm));
    }
    Vec3 d = app.direction / cross_norm;
    auto [plus, minus] = pole_stable_eigenvectors(d);
    QubitBasis q;
    q.v.col(0) = plus;
    q.v.col(1) = minus;
    // A_j |0>_j = e^{-i alpha_j} |1>_j  =>  alpha_j = -arg(<1| A_j |0>).
    q.alpha = wrap_2pi(-std::arg(minus.dot(a.matrix * plus)));
    basis.qubits.push_back(q);
  }
  return basis;
}

GhzForm ghz_form_check(const StateVector& state,
                       const RepresentationBasis& basis) {
  const int n = basis.n();
  if (state.n != n || state.amplitudes.size() != (Eigen::Index(1) << n)) {
    throw Error(ErrorCode::DimensionMismatch,
                "state arity does not match basis");
  }
  // Rotate into the product eigenbasis: amplitudes become <eps|state>.
  VectorXc amps = state.amplitudes;
  for (int j = 1; j <= n; ++j) {
    amps = apply_single_qubit(basis.qubits[j - 1].v.adjoint(), j, amps, n);
  }
  const Eigen::Index dim = amps.size();
  const Eigen::Index idx_a = 1;        // labels 0...0 with last label 1
  const Eigen::Index idx_b = dim - 2;  // labels 1...1 with last label 0
  GhzForm form;
  form.a = amps[idx_a];
  form.b = amps[idx_b];
  double leak = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i != idx_a && i != idx_b) leak += std::norm(amps[i]);
  }
  form.leakage = leak;
  return form;
}

std::pair<double, double> extract_phases(Complex a, Complex b) {
  const double target = 1.0 / std::sqrt(2.0);
  if (std::abs(std::abs(a) - target) > 1e-6 ||
      std::abs(std::abs(b) - target) > 1e-6) {
    throw Error(ErrorCode::NotBalanced,
                "|a|=" + std::to_string(std::abs(a)) +
                    ", |b|=" + std::to_string(std::abs(b)) +
                    " are not both 1/sqrt(2)");
  }
  const double root2 = std::sqrt(2.0);
  return {wrap_2pi(std::arg(a * root2)), wrap_2pi(std::arg(-b * root2))};
}

LocalUnitaryFactorization build_local_unitaries(
    const RepresentationBasis& basis, double phi, double theta) {
  const int n = basis.n();
  LocalUnitaryFactorization f;
  f.phi = phi;
  f.theta = theta;
  f.unitaries.reserve(n);
  const Complex ephi = std::polar(1.0, phi);
  const Complex etheta = std::polar(1.0, theta);
  for (int j = 1; j <= n; ++j) {
    Matrix2c u = basis.qubits[j - 1].v;
    if (j == 1) {
      u.col(0) *= ephi;
    }
    if (j == 2 && n > 2) {
      u.col(1) *= etheta;
    }
    if (j == n) {
      // The last label is complemented in the maximal-violation
      // subspace, so the last unitary swaps the computational columns.
      u = u * pauli_x();
      if (n == 2) u = u * (Matrix2c() << 1, 0, 0, etheta).finished();
    }
    f.unitaries.push_back(u);
  }
  return f;
}

StateVector reconstruct(const LocalUnitaryFactorization& f, int n) {
  if (static_cast<int>(f.unitaries.size()) != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "factorization arity " + std::to_string(f.unitaries.size()) +
                    " does not match n=" + std::to_string(n));
  }
  StateVector s = ghz_state(n);
  for (int j = 1; j <= n; ++j) {
    s.amplitudes = apply_single_qubit(f.unitaries[j - 1], j, s.amplitudes, n);
  }
  return s;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Certified:
      return "CERTIFIED";
    case Verdict::NotMaximal:
      return "NOT_MAXIMAL";
    case Verdict::ConditionsViolated:
      return "CONDITIONS_VIOLATED";
  }
  return "UNKNOWN";
}

CertificationReport certify_maximal_violation(const StateVector& state,
                                              const MeasurementSettings& s,
                                              double tol) {
  const int n = s.n();
  if (n < 2 || state.n != n ||
      state.amplitudes.size() != (Eigen::Index(1) << n)) {
    throw Error(ErrorCode::DimensionMismatch,
                "state arity does not match settings");
  }
  CertificationReport report;
  report.quantum_bound = quantum_bound(n);

  MeasurementSettings working = s;
  double achieved = ardehali_expectation(state, working);
  if (achieved < -(1.0 - tol) * report.quantum_bound) {
    // Negating the last pair negates the operator; certify the flipped
    // settings and record the flip.
    auto& [an, apn] = working.pairs[n - 1];
    an = spin_observable(-an.direction);
    apn = spin_observable(-apn.direction);
    achieved = -achieved;
    report.settings_flipped = true;
  }
  report.achieved_value = achieved;
  report.anticommutation_residuals = check_anticommutation(working);

  if (achieved < (1.0 - tol) * report.quantum_bound) {
    report.verdict = Verdict::NotMaximal;
    return report;
  }

  const double ac_gate = std::sqrt(tol);
  for (double r : report.anticommutation_residuals) {
    if (std::abs(r) > ac_gate) {
      report.verdict = Verdict::ConditionsViolated;
      return report;
    }
  }

  RepresentationBasis basis = build_representation(working);
  GhzForm form = ghz_form_check(state, basis);
  report.ghz_form_leakage = form.leakage;
  if (form.leakage > tol) {
    report.verdict = Verdict::ConditionsViolated;
    return report;
  }

  double phi, theta;
  try {
    std::tie(phi, theta) = extract_phases(form.a, form.b);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotBalanced) {
      report.verdict = Verdict::ConditionsViolated;
      return report;
    }
    throw;
  }

  LocalUnitaryFactorization fact = build_local_unitaries(basis, phi, theta);
  StateVector rec = reconstruct(fact, n);
  report.fidelity = std::norm(rec.amplitudes.dot(state.amplitudes));
  if (report.fidelity >= 1.0 - 100.0 * tol) {
    report.verdict = Verdict::Certified;
    report.factorization = std::move(fact);
  } else {
    report.verdict = Verdict::ConditionsViolated;
  }
  return report;
}

}  // namespace ardehali
