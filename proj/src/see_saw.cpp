#include "ardehali/see_saw.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ardehali/qubit_algebra.hpp"
#include "ardehali/random.hpp"

namespace ardehali {

namespace {

// <state| [ re x (D) + im x (S) ] |state> where (re, im) split the
// product of per-site complex factors over sites 1..n-1.
double probe_value(const StateVector& state,
                   const std::vector<Matrix2c>& factors, const Matrix2c& d,
                   const Matrix2c& s) {
  const int n = state.n;
  VectorXc u = state.amplitudes;
  for (int j = 1; j < n; ++j) {
    u = apply_single_qubit(factors[j - 1], j, u, n);
  }
  Complex zd = u.dot(apply_single_qubit(d, n, state.amplitudes, n));
  Complex zs = u.dot(apply_single_qubit(s, n, state.amplitudes, n));
  return zd.real() - zs.imag();
}

const Matrix2c& pauli(int k) {
  switch (k) {
    case 0:
      return pauli_x();
    case 1:
      return pauli_y();
    default:
      return pauli_z();
  }
}

}  // namespace

std::pair<Vec3, Vec3> coefficient_vectors(const StateVector& state,
                                          const MeasurementSettings& settings,
                                          int j) {
  const int n = settings.n();
  if (state.n != n || j < 1 || j > n) {
    throw Error(ErrorCode::DimensionMismatch,
                "site " + std::to_string(j) + " invalid for n=" +
                    std::to_string(n));
  }
  std::vector<Matrix2c> base(n - 1);
  for (int s = 1; s < n; ++s) {
    base[s - 1] = settings.pairs[s - 1].first.matrix +
                  Complex(0, 1) * settings.pairs[s - 1].second.matrix;
  }
  const Matrix2c an = settings.pairs[n - 1].first.matrix;
  const Matrix2c apn = settings.pairs[n - 1].second.matrix;

  Vec3 c, cp;
  for (int k = 0; k < 3; ++k) {
    const Matrix2c& sig = pauli(k);
    if (j < n) {
      std::vector<Matrix2c> f = base;
      f[j - 1] = sig;  // A_j -> sigma_k, A'_j -> 0
      c[k] = probe_value(state, f, an - apn, an + apn);
      f[j - 1] = Complex(0, 1) * sig;  // A_j -> 0, A'_j -> sigma_k
      cp[k] = probe_value(state, f, an - apn, an + apn);
    } else {
      c[k] = probe_value(state, base, sig, sig);
      cp[k] = probe_value(state, base, -sig, sig);
    }
  }
  return {c, cp};
}

OptimizationResult see_saw(const StateVector& state,
                           const OptimizationConfig& cfg) {
  const int n = state.n;
  if (n < 2) {
    throw Error(ErrorCode::OutOfRange, "need at least 2 qubits");
  }
  if (cfg.restarts < 1 || cfg.value_tol <= 0) {
    throw Error(ErrorCode::OutOfRange, "invalid optimization config");
  }
  Rng rng(cfg.seed);
  OptimizationResult best;
  bool have_best = false;

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    MeasurementSettings settings;
    settings.pairs.reserve(n);
    for (int j = 0; j < n; ++j) {
      settings.pairs.emplace_back(spin_observable(rng.unit_vector()),
                                  spin_observable(rng.unit_vector()));
    }
    double value = ardehali_expectation(state, settings);
    int sweeps = 0;
    bool converged = false;
    for (; sweeps < cfg.max_sweeps; ++sweeps) {
      for (int j = 1; j <= n; ++j) {
        auto [c, cp] = coefficient_vectors(state, settings, j);
        if (double nc = c.norm(); nc > 1e-14) {
          settings.pairs[j - 1].first = spin_observable(c / nc);
        }
        if (double ncp = cp.norm(); ncp > 1e-14) {
          settings.pairs[j - 1].second = spin_observable(cp / ncp);
        }
      }
      double new_value = ardehali_expectation(state, settings);
      if (new_value - value < cfg.value_tol) {
        value = std::max(value, new_value);
        converged = true;
        ++sweeps;
        break;
      }
      value = new_value;
    }
    if (!have_best || value > best.best_value) {
      have_best = true;
      best.best_value = value;
      best.best_settings = settings;
      best.sweeps_used = sweeps;
      best.converged = converged;
    }
  }
  return best;
}

std::pair<double, StateVector> optimal_state(
    const MeasurementSettings& settings) {
  EigenPair p = max_eigenpair(ardehali_operator(settings));
  StateVector s;
  s.n = settings.n();
  s.amplitudes = p.vector;
  return {p.value, s};
}

}  // namespace ardehali
