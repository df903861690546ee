#ifndef ARDEHALI_QUBIT_ALGEBRA_HPP
#define ARDEHALI_QUBIT_ALGEBRA_HPP

#include "ardehali/types.hpp"

namespace ardehali {

const Matrix2c& pauli_x();
const Matrix2c& pauli_y();
const Matrix2c& pauli_z();
const Matrix2c& identity2();

/// v . sigma for a unit direction v; throws NonUnitDirection otherwise.
SpinObservable spin_observable(const Vec3& v);

/// Euclidean dot product of the two directions (= tr(AB)/2).
double observable_inner(const SpinObservable& a, const SpinObservable& b);

/// (a x b) . sigma; the direction is generally non-unit and may be zero.
SpinObservable observable_cross(const SpinObservable& a,
                                const SpinObservable& b);

/// Tensor product respecting qubit-1-is-most-significant-bit ordering;
/// throws DimensionOverflow past the dense qubit cap.
MatrixXc kron(const MatrixXc& a, const MatrixXc& b);

int qubit_count(Eigen::Index dim);

/// <s|H|s> with the imaginary residual checked against
/// Tolerances::expectation_imag and then discarded.
double expectation(const StateVector& s, const MatrixXc& h);

/// Applies a 2x2 operator to qubit j (1-based) of an n-qubit vector.
VectorXc apply_single_qubit(const Matrix2c& m, int j, const VectorXc& v,
                            int n);

struct EigenPair {
  double value = 0.0;
  VectorXc vector;
};

/// Algebraically largest eigenvalue and eigenvector of Hermitian h,
/// by power iteration on h + c*I with c an infinity-norm row-sum bound
/// so the target dominates. Throws NoConvergence with the residual
/// achieved if the iteration budget runs out.
EigenPair max_eigenpair(const MatrixXc& h,
                        const Tolerances& tol = default_tolerances());

/// max(|lambda_max|, |lambda_min|) via max_eigenpair on h and -h.
double operator_norm(const MatrixXc& h,
                     const Tolerances& tol = default_tolerances());

}  // namespace ardehali

#endif
