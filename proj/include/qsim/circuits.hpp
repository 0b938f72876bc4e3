#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qsim/gates.hpp"
#include "qsim/qstate.hpp"

namespace qsim {

/// A named unitary with its binding arity. Qubit binding lives in the
/// circuit step, not here.
struct GateSpec {
  enum class Kind {
    Matrix1Q,               // qubits: {target}
    ControlledMatrix,       // qubits: {control, target}
    ControlledPhase,        // qubits: {q1, q2}, symmetric B(param)
    Permutation,            // qubits: targets (low bit first)
    ControlledPermutation,  // qubits: {control, targets...}
    Toffoli,                // qubits: {c1, c2, target}
    Swap,                   // qubits: {q1, q2}
  };

  Kind kind;
  std::string name;
  Matrix2 matrix{};      // Matrix1Q / ControlledMatrix
  double param = 0.0;    // phase angles, radians
  BasisPermutation perm; // (Controlled)Permutation

  static GateSpec matrix_1q(std::string name, const Matrix2& m, double param = 0.0);
  static GateSpec controlled(std::string name, const Matrix2& m, double param = 0.0);
  static GateSpec controlled_phase(double phi);
  static GateSpec permutation(std::string name, BasisPermutation p);
  static GateSpec controlled_permutation(std::string name, BasisPermutation p);
  static GateSpec toffoli();
  static GateSpec swap();
};

/// Ordered gate applications bound to qubit indices. Immutable once built
/// (construction helpers aside); run() never mutates the circuit.
class Circuit {
 public:
  struct Step {
    GateSpec gate;
    std::vector<int> qubits;
  };

  explicit Circuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Step>& steps() const { return steps_; }

  void add(GateSpec gate, std::vector<int> qubits);

  StateVector run(StateVector input) const;

  /// Same circuit bound to qubits shifted by `offset` on a wider register.
  Circuit shifted(int offset, int new_num_qubits) const;

  /// Reversed-adjoint circuit; composes with the original to the identity.
  Circuit inverse() const;

  /// One step per line: `GATE q[i] q[j] (params)`.
  std::string pretty() const;

 private:
  int num_qubits_;
  std::vector<Step> steps_;
};

/// Full 2^n x 2^n operator of a circuit, column j = circuit applied to |j>.
/// Row-major, entry (i, j) at i * 2^n + j.
std::vector<Amplitude> unitary_of(const Circuit& c);

/// Truth table for f: {0,1}^n_in -> {0,1}^m_out.
struct Oracle {
  int n_in = 0;
  int m_out = 0;
  std::vector<std::uint64_t> table;  // 2^n_in entries, each < 2^m_out

  static Oracle from_function(int n_in, int m_out,
                              const std::function<std::uint64_t(std::uint64_t)>& f);
  void validate() const;
};

/// |x, y> -> |x, (y + f(x)) mod 2^m>, x in the low-order qubits.
BasisPermutation oracle_permutation(const Oracle& f);

/// Applies the oracle to an (n_in + m_out)-qubit register.
void apply_oracle(StateVector& sv, const Oracle& f);

/// H on every qubit: |y> -> 2^{-n/2} sum_x (-1)^{y.x} |x>.
void hadamard_all(StateVector& sv);

/// QFT circuit |y> -> 2^{-n/2} sum_x e^{2 pi i y x / 2^n} |x>.
/// With bit_reversed = true the final swap network is omitted and the output
/// bits come out reversed, matching the raw network shape.
Circuit qft(int n, bool bit_reversed = false);
Circuit inverse_qft(int n, bool bit_reversed = false);

/// Number of H and B(phi) steps in a circuit (swaps excluded).
int elementary_gate_count(const Circuit& c);

/// c-NOT as H, c-V, c-V, H on the target; qubit 0 control, qubit 1 target.
Circuit cnot_from_h_cv();

/// Toffoli from H, c-V, c-V-dagger and c-NOTs; qubits 0,1 controls, 2 target.
Circuit toffoli_from_h_cv();

/// |x1, x2, 0> -> |x1, x1 xor x2, x1 and x2> (Toffoli then c-NOT).
Circuit half_adder();

/// Simulates H, phase(phi0 - phi1), H on |0> and returns (P0, P1).
std::pair<double, double> mach_zehnder(double phi0, double phi1);

/// |u> = 2^{-m/2} sum_y e^{-2 pi i y / 2^m} |y>, i.e. the QFT of |11...1>.
/// Feeding it as the oracle's second register turns function evaluation into
/// the phase factor e^{2 pi i f(x) / 2^m}.
StateVector eigenvalue_kickback_state(int m);

}  // namespace qsim
