#include "ardehali/bell_operators.hpp"

#include <cmath>
#include <string>

namespace ardehali {

OperatorPair re_im(const MeasurementSettings& settings, int k) {
  if (k < 1 || k > settings.n()) {
    throw Error(ErrorCode::OutOfRange,
                "k=" + std::to_string(k) + " outside 1.." +
                    std::to_string(settings.n()));
  }
  OperatorPair p;
  p.k = k;
  p.re = settings.pairs[0].first.matrix;
  p.im = settings.pairs[0].second.matrix;
  for (int j = 1; j < k; ++j) {
    const MatrixXc& a = settings.pairs[j].first.matrix;
    const MatrixXc& ap = settings.pairs[j].second.matrix;
    MatrixXc re_next = kron(p.re, a) - kron(p.im, ap);
    p.im = kron(p.im, a) + kron(p.re, ap);
    p.re = std::move(re_next);
  }
  return p;
}

MatrixXc ardehali_operator(const MeasurementSettings& settings) {
  int n = settings.n();
  if (n < 2) {
    throw Error(ErrorCode::OutOfRange, "need at least 2 qubits");
  }
  OperatorPair p = re_im(settings, n - 1);
  const Matrix2c& an = settings.pairs[n - 1].first.matrix;
  const Matrix2c& apn = settings.pairs[n - 1].second.matrix;
  return kron(p.re, an - apn) + kron(p.im, an + apn);
}

MatrixXc chsh_operator(const SpinObservable& a, const SpinObservable& ap,
                       const SpinObservable& b, const SpinObservable& bp) {
  return kron(a.matrix, b.matrix + bp.matrix) +
         kron(ap.matrix, b.matrix - bp.matrix);
}

MatrixXc mermin_operator(const MeasurementSettings& settings) {
  return re_im(settings, settings.n()).im;
}

MeasurementSettings canonical_settings(int n) {
  if (n < 2) {
    throw Error(ErrorCode::OutOfRange, "need at least 2 qubits");
  }
  MeasurementSettings s;
  s.pairs.reserve(n);
  for (int j = 0; j + 1 < n; ++j) {
    s.pairs.emplace_back(spin_observable(Vec3(1, 0, 0)),
                         spin_observable(Vec3(0, 1, 0)));
  }
  const double h = std::sqrt(2.0) / 2.0;
  s.pairs.emplace_back(spin_observable(Vec3(-h, h, 0)),
                       spin_observable(Vec3(h, h, 0)));
  return s;
}

double quantum_bound(int n) {
  if (n < 2) {
    throw Error(ErrorCode::OutOfRange, "need at least 2 qubits");
  }
  return std::ldexp(std::sqrt(2.0), n - 1);  // 2^{n-1/2}
}

double classical_bound(int n) {
  if (n < 2) {
    throw Error(ErrorCode::OutOfRange, "need at least 2 qubits");
  }
  return n % 2 == 0 ? std::ldexp(1.0, n / 2) : std::ldexp(1.0, (n + 1) / 2);
}

BoundsReport bounds_report(int n) {
  BoundsReport r;
  r.n = n;
  r.classical_bound = classical_bound(n);
  r.quantum_bound = quantum_bound(n);
  r.violation_factor = r.quantum_bound / r.classical_bound;
  return r;
}

StateVector ghz_state(int n) {
  if (n < 1) {
    throw Error(ErrorCode::OutOfRange, "need at least 1 qubit");
  }
  StateVector s;
  s.n = n;
  s.amplitudes = VectorXc::Zero(Eigen::Index(1) << n);
  const double h = 1.0 / std::sqrt(2.0);
  s.amplitudes[0] = h;
  s.amplitudes[s.amplitudes.size() - 1] = -h;
  return s;
}

StateVector w_state(int n) {
  if (n < 2) {
    throw Error(ErrorCode::OutOfRange, "need at least 2 qubits");
  }
  StateVector s;
  s.n = n;
  s.amplitudes = VectorXc::Zero(Eigen::Index(1) << n);
  const double h = 1.0 / std::sqrt(double(n));
  for (int j = 0; j < n; ++j) {
    s.amplitudes[Eigen::Index(1) << j] = h;
  }
  return s;
}

double ardehali_expectation(const StateVector& state,
                            const MeasurementSettings& settings) {
  const int n = settings.n();
  if (n < 2 || state.n != n ||
      state.amplitudes.size() != (Eigen::Index(1) << n)) {
    throw Error(ErrorCode::DimensionMismatch,
                "state arity does not match settings");
  }
  // u = (A_1 + iA'_1) ... (A_{n-1} + iA'_{n-1}) |state>. With
  // Re + i Im equal to that product as an operator, Re and Im both
  // Hermitian, the two branch expectations reduce to one overlap each.
  VectorXc u = state.amplitudes;
  for (int j = 1; j < n; ++j) {
    Matrix2c c = settings.pairs[j - 1].first.matrix +
                 Complex(0, 1) * settings.pairs[j - 1].second.matrix;
    u = apply_single_qubit(c, j, u, n);
  }
  Matrix2c diff = settings.pairs[n - 1].first.matrix -
                  settings.pairs[n - 1].second.matrix;
  Matrix2c sum = settings.pairs[n - 1].first.matrix +
                 settings.pairs[n - 1].second.matrix;
  Complex zd = u.dot(apply_single_qubit(diff, n, state.amplitudes, n));
  Complex zs = u.dot(apply_single_qubit(sum, n, state.amplitudes, n));
  return zd.real() - zs.imag();
}

double re_square_upper_bound(const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  if (n < 2) {
    throw Error(ErrorCode::OutOfRange, "need at least 2 entries");
  }
  double prod_x = 1.0;
  double prod_plus = 1.0;   // prod (1 + sqrt(1-x^2))
  double prod_minus = 1.0;  // prod (1 - sqrt(1-x^2))
  for (double xi : x) {
    if (std::abs(xi) > 1.0) {
      throw Error(ErrorCode::OutOfRange,
                  "entry " + std::to_string(xi) + " outside [-1,1]");
    }
    double y = std::sqrt(1.0 - xi * xi);
    prod_x *= xi;
    prod_plus *= 1.0 + y;
    prod_minus *= 1.0 - y;
  }
  // Sum over even-size subsets of prod sqrt(1-x^2), empty set included.
  double even_sum = 0.5 * (prod_plus + prod_minus);
  double value = even_sum;
  if (n % 2 == 0) {
    value += (n / 2 % 2 == 0 ? 1.0 : -1.0) * prod_x;
  }
  return std::ldexp(value, n - 1);
}

}  // namespace ardehali
