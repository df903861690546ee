#ifndef ARDEHALI_BELL_OPERATORS_HPP
#define ARDEHALI_BELL_OPERATORS_HPP

#include "ardehali/qubit_algebra.hpp"
#include "ardehali/types.hpp"

namespace ardehali {

/// Re_k and Im_k, the Hermitian "real/imaginary parts" of
/// (A_1 + iA'_1) x ... x (A_k + iA'_k).
struct OperatorPair {
  MatrixXc re;
  MatrixXc im;
  int k = 0;
};

struct BoundsReport {
  int n = 0;
  double classical_bound = 0.0;
  double quantum_bound = 0.0;
  double violation_factor = 0.0;
};

/// Builds (Re_k, Im_k) over the first k sites by the recursion
/// Re_j = Re_{j-1} x A_j - Im_{j-1} x A'_j,
/// Im_j = Im_{j-1} x A_j + Re_{j-1} x A'_j.
OperatorPair re_im(const MeasurementSettings& settings, int k);

/// Re_{n-1} x (A_n - A'_n) + Im_{n-1} x (A_n + A'_n).
MatrixXc ardehali_operator(const MeasurementSettings& settings);

/// A x (B + B') + A' x (B - B'); norm at most 2*sqrt(2).
MatrixXc chsh_operator(const SpinObservable& a, const SpinObservable& ap,
                       const SpinObservable& b, const SpinObservable& bp);

/// Im_n over all sites.
MatrixXc mermin_operator(const MeasurementSettings& settings);

/// A_j = sigma_x, A'_j = sigma_y for j < n; the last pair makes 135 and
/// 45 degrees with the x axis in the x-y plane.
MeasurementSettings canonical_settings(int n);

/// 2^{n-1/2}.
double quantum_bound(int n);

/// 2^{n/2} for n even, 2^{(n+1)/2} for n odd.
double classical_bound(int n);

BoundsReport bounds_report(int n);

/// (|0...0> - |1...1>)/sqrt(2).
StateVector ghz_state(int n);

/// Equal superposition of the n single-excitation basis states.
StateVector w_state(int n);

/// Scalar upper bound for |Re_n^2| as a function of the per-site inner
/// products x_j; maximal value 2^{2(n-1)}. For n >= 3 the maximum is
/// attained only at the origin; for n = 2 it is attained along the
/// whole anti-diagonal x_2 = -x_1, so the two-site bound alone does
/// not force orthogonal pairs.
double re_square_upper_bound(const std::vector<double>& x);

/// <state| A_n |state> without materializing the dense operator:
/// applies (A_j + iA'_j) site by site and splits the Hermitian parts.
/// Works for any n the state vector itself fits in memory.
double ardehali_expectation(const StateVector& state,
                            const MeasurementSettings& settings);

}  // namespace ardehali

#endif
