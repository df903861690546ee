#ifndef ARDEHALI_CHARACTERIZATION_HPP
#define ARDEHALI_CHARACTERIZATION_HPP

#include <optional>
#include <vector>

#include "ardehali/bell_operators.hpp"
#include "ardehali/types.hpp"

namespace ardehali {

/// Eigenbasis of A''_j = A_j x A'_j per qubit. Column 0 of v is the +1
/// eigenvector |0>_j, column 1 the -1 eigenvector |1>_j; alpha is the
/// phase in A_j|0>_j = e^{-i alpha}|1>_j.
struct QubitBasis {
  Matrix2c v;
  double alpha = 0.0;
};

struct RepresentationBasis {
  std::vector<QubitBasis> qubits;
  int n() const { return static_cast<int>(qubits.size()); }
};

struct LocalUnitaryFactorization {
  std::vector<Matrix2c> unitaries;
  double phi = 0.0;
  double theta = 0.0;
};

enum class Verdict { Certified, NotMaximal, ConditionsViolated };

struct CertificationReport {
  Verdict verdict = Verdict::NotMaximal;
  double achieved_value = 0.0;
  double quantum_bound = 0.0;
  std::vector<double> anticommutation_residuals;
  std::optional<double> ghz_form_leakage;
  std::optional<LocalUnitaryFactorization> factorization;
  double fidelity = 0.0;
  bool settings_flipped = false;
};

/// (A_j, A'_j) per qubit; all must vanish at maximal violation.
std::vector<double> check_anticommutation(const MeasurementSettings& settings);

/// Max residual over the Pauli-algebra identities AA' = iA'',
/// A'A'' = iA, A''A = iA', and the three involutions, with A'' = A x A'.
/// Requires |(A, A')| <= 0.1.
double pauli_triple_residual(const SpinObservable& a, const SpinObservable& ap);

/// Per-qubit gauge-fixed eigenbases of the cross observables, with the
/// phases alpha_j = -arg(<1|A_j|0>).
RepresentationBasis build_representation(const MeasurementSettings& settings);

struct GhzForm {
  Complex a;       // amplitude carried by |0...0>|1>_n in the basis
  Complex b;       // amplitude carried by |1...1>|0>_n
  double leakage;  // total probability outside those two
};

/// Expresses the state in the product eigenbasis and reads off the two
/// amplitudes a maximally violating state is confined to. The squared
/// operator fixes the parity (sum of labels with the last complemented
/// is even), which places the support at |0..0 1> and |1..1 0> rather
/// than at the extreme indices.
GhzForm ghz_form_check(const StateVector& state,
                       const RepresentationBasis& basis);

/// phi = arg(a sqrt 2), theta = arg(-b sqrt 2), each in [0, 2pi);
/// requires |a| and |b| within 1e-6 of 1/sqrt(2).
std::pair<double, double> extract_phases(Complex a, Complex b);

/// U_1 = V_1 diag(e^{i phi}, 1), U_2 = V_2 diag(1, e^{i theta}),
/// U_j = V_j in between, and U_n = V_n X to undo the complemented last
/// label (at n = 2 the theta factor rides on U_n as V_n X diag(1, e^{i
/// theta})). V_j is the column matrix of the j-th eigenbasis.
LocalUnitaryFactorization build_local_unitaries(
    const RepresentationBasis& basis, double phi, double theta);

/// (U_1 x ... x U_n) |GHZ>.
StateVector reconstruct(const LocalUnitaryFactorization& f, int n);

/// Full pipeline: value gate, anticommutation gate (sqrt(tol)),
/// representation + leakage gate (tol), phase extraction, unitary
/// reconstruction, fidelity gate (1 - 100 tol). A state attaining the
/// negative extreme is certified against (-A_n, -A'_n) with
/// settings_flipped set.
CertificationReport certify_maximal_violation(
    const StateVector& state, const MeasurementSettings& settings, double tol);

const char* verdict_name(Verdict v);

}  // namespace ardehali

#endif
