#ifndef ARDEHALI_SEE_SAW_HPP
#define ARDEHALI_SEE_SAW_HPP

#include <cstdint>
#include <utility>

#include "ardehali/bell_operators.hpp"
#include "ardehali/types.hpp"

namespace ardehali {

struct OptimizationConfig {
  int restarts = 20;
  int max_sweeps = 500;
  double value_tol = 1e-10;
  std::uint64_t seed = 0;
};

struct OptimizationResult {
  double best_value = 0.0;
  MeasurementSettings best_settings;
  int sweeps_used = 0;
  bool converged = false;
};

/// Gradient coefficients of <A_n> at site j (1-based): the expectation
/// is c . a_j + c' . a'_j when every other direction is held fixed,
/// by multilinearity. Computed matrix-free with unit-Pauli probes.
std::pair<Vec3, Vec3> coefficient_vectors(const StateVector& state,
                                          const MeasurementSettings& settings,
                                          int j);

/// Alternating maximization of <A_n> over measurement directions:
/// every site update replaces a direction with its normalized
/// coefficient vector (exact linear maximization, monotone). Best over
/// seeded random restarts.
OptimizationResult see_saw(const StateVector& state,
                           const OptimizationConfig& cfg);

/// Top eigenpair of the dense operator for the given settings.
std::pair<double, StateVector> optimal_state(
    const MeasurementSettings& settings);

}  // namespace ardehali

#endif
