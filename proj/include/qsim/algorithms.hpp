#pragma once

#include <cstdint>
#include <vector>

#include "qsim/circuits.hpp"
#include "qsim/qstate.hpp"

namespace qsim {

enum class PromiseClass { Constant, Balanced };

struct QueryResult {
  PromiseClass cls;
  int oracle_calls;
};

/// One-query test of a single-bit oracle: Constant iff f(0) = f(1).
QueryResult deutsch(const Oracle& f);

/// One-query test of an n-bit oracle promised constant or balanced.
/// A violated promise is not detected; the result is then unspecified.
QueryResult deutsch_jozsa(const Oracle& f);

/// One Grover iterate G = R_S R_k: sign flip on |k>, then inversion about
/// the uniform state |S>.
StateVector grover_iterate(StateVector sv, BasisIndex k);

/// Same iterate run through the explicit two-register network with the
/// ancilla in (|0> - |1>)/sqrt(2); used to cross-validate the direct form.
StateVector grover_iterate_explicit(StateVector sv, BasisIndex k);

/// m = round(pi / (4 phi) - 1/4) with sin(phi) = 2^{-n/2}; ties round up.
int grover_iteration_count(int n);

/// Exact output distribution after grover_iteration_count(n) iterates from
/// |S>.
std::vector<double> grover_distribution(int n, BasisIndex k);

struct GroverResult {
  BasisIndex outcome;
  int iterations;
  double success_probability;  // exact P(outcome = k), not sampled
};

GroverResult grover_search(int n, BasisIndex k, std::uint64_t rng_seed);

/// Abstract m-qubit unitary offering controlled powers U^{2^j}. The target
/// register occupies qubits 0..m-1 of the state it is applied to.
class ControlledUnitary {
 public:
  virtual ~ControlledUnitary() = default;
  virtual int num_target_qubits() const = 0;
  /// U applied to an m-qubit state.
  virtual void apply(StateVector& sv) const = 0;
  /// Controlled-U^{2^j}; powers are formed by repeated squaring.
  virtual void apply_controlled_power(StateVector& sv, int control,
                                      int j) const = 0;
};

/// diag(1, e^{2 pi i turns}) on one qubit. Phases are kept in turns
/// (fraction of a full revolution) to avoid pi-multiple rounding.
class PhaseUnitary : public ControlledUnitary {
 public:
  explicit PhaseUnitary(double turns) : turns_(turns) {}
  int num_target_qubits() const override { return 1; }
  void apply(StateVector& sv) const override;
  void apply_controlled_power(StateVector& sv, int control, int j) const override;
  double turns() const { return turns_; }

 private:
  double turns_;
};

struct PhaseEstimate {
  std::uint64_t bits;  // estimate of the phase is bits / 2^n turns
  int n;
};

/// Exact measurement distribution of the n-qubit estimation register after
/// the controlled-power ladder and inverse QFT, with the target prepared in
/// `u`.
std::vector<double> phase_estimation_distribution(const ControlledUnitary& op,
                                                  const StateVector& u, int n);

/// Runs the network and samples the register once. Checks that `u` is an
/// eigenstate of the operator (residual below eigen_tol) and throws
/// std::invalid_argument if not.
PhaseEstimate phase_estimate(const ControlledUnitary& op, const StateVector& u,
                             int n, std::uint64_t rng_seed,
                             double eigen_tol = 1e-8);

/// Best n-bit estimates a of `turns` (closest a/2^n on the circle). Both
/// neighbours are returned on an exact tie.
std::vector<std::uint64_t> best_estimates(double turns, int n);

}  // namespace qsim
