#ifndef ARDEHALI_TYPES_HPP
#define ARDEHALI_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ardehali {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;

enum class ErrorCode {
  NonUnitDirection,
  DimensionOverflow,
  DimensionMismatch,
  NonHermitianResult,
  NoConvergence,
  EnumerationTooLarge,
  InvalidDistribution,
  OutOfRange,
  NotAnticommuting,
  DegenerateCross,
  NotBalanced,
  MalformedInput,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Central numeric tolerances. Acceptance thresholds reference these
/// defaults; tests may construct looser/tighter copies locally.
struct Tolerances {
  double unit_direction = 1e-9;
  double hermitian = 1e-10;
  double expectation_imag = 1e-9;
  double state_norm = 1e-10;
  double state_file_norm = 1e-8;
  double eigen_residual = 1e-10;
  double eigen_rel_change = 1e-12;
  double eigen_post_residual = 1e-8;
  int eigen_max_iters = 50000;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

/// Dense operators are capped at this many qubits (2^24 complex entries
/// at the default). The ARDEHALI_DENSE_CAP environment variable or
/// set_dense_qubit_cap() overrides it.
int dense_qubit_cap();
void set_dense_qubit_cap(int n);

/// One measurement direction with its 2x2 matrix v . sigma.
struct SpinObservable {
  Vec3 direction;
  Matrix2c matrix;
};

/// n-qubit pure state; qubit 1 occupies the most significant bit of the
/// amplitude index, matching left-to-right tensor order.
struct StateVector {
  int n = 0;
  VectorXc amplitudes;
};

/// Per-qubit observable pairs (A_j, A'_j), j = 1..n in order.
struct MeasurementSettings {
  std::vector<std::pair<SpinObservable, SpinObservable>> pairs;
  int n() const { return static_cast<int>(pairs.size()); }
};

}  // namespace ardehali

#endif
