#pragma once

#include <cstdint>
#include <vector>

#include "qsim/qstate.hpp"

namespace qsim {

/// 2x2 unitary, row-major: [[a, b], [c, d]].
struct Matrix2 {
  Amplitude a, b, c, d;
};

Matrix2 gate_h();
Matrix2 gate_phase(double phi);
Matrix2 gate_v();        // diag(1, i)
Matrix2 gate_v_dagger();
Matrix2 gate_x();
Matrix2 gate_z();
Matrix2 gate_identity();

Matrix2 adjoint(const Matrix2& m);
Matrix2 matmul(const Matrix2& lhs, const Matrix2& rhs);
bool is_unitary(const Matrix2& m, double tol = kTol);

/// Bijection on the basis indices of a target sub-register.
struct BasisPermutation {
  std::vector<std::uint64_t> map;  // map[y] = image of |y>
  bool is_bijection() const;
  BasisPermutation inverse() const;
};

void apply_1q(StateVector& sv, const Matrix2& g, int q);
void apply_controlled_1q(StateVector& sv, int control, const Matrix2& g,
                         int target);
void apply_cnot(StateVector& sv, int control, int target);
void apply_controlled_phase(StateVector& sv, int q1, int q2, double phi);  // B(phi)
void apply_toffoli(StateVector& sv, int c1, int c2, int target);
void apply_swap(StateVector& sv, int q1, int q2);

/// Permutes the sub-register formed by `targets` (targets[0] is the low bit
/// of the permutation's index). With control < 0 the action is unconditional.
void apply_permutation(StateVector& sv, const std::vector<int>& targets,
                       const BasisPermutation& perm, int control = -1);

/// Runs the four-gate interferometer network H, phase(2*theta), H, phase(pi/2+phi)
/// on |0>, producing cos(theta)|0> + e^{i phi} sin(theta)|1> up to a global
/// phase.
StateVector prepare_1q(double theta, double phi);

}  // namespace qsim
