#pragma once

#include <array>
#include <iosfwd>
#include <utility>
#include <vector>

#include "qsim/circuits.hpp"
#include "qsim/qstate.hpp"

namespace qsim {

/// Hermitian, unit-trace, positive-semidefinite matrix. Row-major storage.
class DensityMatrix {
 public:
  explicit DensityMatrix(int dim);
  static DensityMatrix from_state(const StateVector& sv);

  int dim() const { return dim_; }
  Amplitude& at(int r, int c) { return entries_[std::size_t(r) * dim_ + c]; }
  const Amplitude& at(int r, int c) const {
    return entries_[std::size_t(r) * dim_ + c];
  }

  double trace_real() const;
  std::vector<double> eigenvalues() const;  // ascending, Jacobi iteration
  /// Throws std::domain_error when Hermiticity (1e-12), trace (1e-12) or
  /// positivity (eigenvalues >= -1e-10) fails.
  void validate() const;

 private:
  int dim_;
  std::vector<Amplitude> entries_;
};

/// Reduced density matrix of the listed qubits; keep[0] becomes the LSB.
DensityMatrix reduced_density(const StateVector& sv,
                              const std::vector<int>& keep);

/// <psi| rho |psi>.
double state_fidelity(const DensityMatrix& rho, const StateVector& psi);

/// Dephasing by an environment with overlap <m0|m1> = kappa in [0, 1]:
/// diagonal kept, off-diagonals scaled by kappa.
DensityMatrix decohere_qubit(const DensityMatrix& rho, double kappa);

/// (P0, P1) of the interference experiment H, phase(phi), environment
/// coupling, H. Closed form P0 = (1 + kappa cos phi) / 2.
std::pair<double, double> interference_probabilities(double phi, double kappa);
/// The same experiment simulated on qubit (x) environment; agrees with the
/// closed form to 1e-12.
std::pair<double, double> interference_probabilities_sim(double phi,
                                                         double kappa);

/// <M_x|M_y> = kappa^{H(x,y)} over a register, H the Hamming distance.
double register_coherence(BasisIndex x, BasisIndex y, double kappa);

/// Fidelity of one decohered qubit with |alpha|^2 = x: x^2 + (1-x)^2
/// + 2 x (1-x) kappa.
double pointwise_fidelity(double x, double kappa);

/// Mean fidelity over d|alpha|^2 on [0,1]: (2 + e^{-gamma_t}) / 3.
double average_fidelity_plain(double gamma_t);
/// Quadrature of pointwise fidelities built from decohere_qubit.
double average_fidelity_plain_numeric(double gamma_t, int intervals = 64);

/// Same average with the 3-qubit phase-flip code and perfect correction:
/// (1/6) (4 + 3 e^{-gamma_t} - e^{-3 gamma_t}).
double average_fidelity_encoded(double gamma_t);
/// Full simulation: encode, couple each qubit to its own environment,
/// decode, trace environments and syndrome out, average by quadrature.
double average_fidelity_encoded_sim(double gamma_t, int intervals = 64);

/// |0> -> |0bar 0bar 0bar> with |0bar> = (|0> + |1>)/sqrt(2); data on
/// qubit 0, ancillas on 1 and 2: two c-NOTs then H on all three.
Circuit encode3_circuit();
/// Inverse network plus Toffoli correction: H^3, c-NOTs, Toffoli(1,2 -> 0).
Circuit decode3_circuit();

StateVector encode3(const StateVector& single);

struct Decode3Result {
  StateVector post;                      // state after the decoding network
  std::array<double, 4> syndrome_probs;  // indexed by 2 q1 + q2
  int syndrome;                          // most probable syndrome
  DensityMatrix data;                    // reduced state of qubit 0
};

/// Syndromes: 00 no error, 01 phase flip on the third qubit (2), 10 on the
/// second (1), 11 on the first (0); the data qubit is restored exactly for
/// any single flip.
Decode3Result decode3(const StateVector& sv);

/// Rows `gamma_t, fidelity_plain, fidelity_encoded` (12 significant digits)
/// at `steps` evenly spaced points from 0 to gamma_t_max, after a header.
void write_fidelity_csv(std::ostream& out, double gamma_t_max, int steps);

}  // namespace qsim
