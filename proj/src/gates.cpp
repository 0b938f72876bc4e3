#include "qsim/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsim {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_qubit(const StateVector& sv, int q) {
  if (q < 0 || q >= sv.num_qubits())
    throw std::domain_error("qubit index out of range");
}
}  // namespace

Matrix2 gate_h() {
  return {{kInvSqrt2, 0}, {kInvSqrt2, 0}, {kInvSqrt2, 0}, {-kInvSqrt2, 0}};
}

Matrix2 gate_phase(double phi) {
  return {{1, 0}, {0, 0}, {0, 0}, std::polar(1.0, phi)};
}

Matrix2 gate_v() { return {{1, 0}, {0, 0}, {0, 0}, {0, 1}}; }
Matrix2 gate_v_dagger() { return {{1, 0}, {0, 0}, {0, 0}, {0, -1}}; }
Matrix2 gate_x() { return {{0, 0}, {1, 0}, {1, 0}, {0, 0}}; }
Matrix2 gate_z() { return {{1, 0}, {0, 0}, {0, 0}, {-1, 0}}; }
Matrix2 gate_identity() { return {{1, 0}, {0, 0}, {0, 0}, {1, 0}}; }

Matrix2 adjoint(const Matrix2& m) {
  return {std::conj(m.a), std::conj(m.c), std::conj(m.b), std::conj(m.d)};
}

Matrix2 matmul(const Matrix2& l, const Matrix2& r) {
  return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
          l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

bool is_unitary(const Matrix2& m, double tol) {
  Matrix2 p = matmul(adjoint(m), m);
  return std::abs(p.a - Amplitude{1, 0}) < tol && std::abs(p.b) < tol &&
         std::abs(p.c) < tol && std::abs(p.d - Amplitude{1, 0}) < tol;
}

bool BasisPermutation::is_bijection() const {
  std::vector<bool> seen(map.size(), false);
  for (auto v : map) {
    if (v >= map.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

BasisPermutation BasisPermutation::inverse() const {
  BasisPermutation inv;
  inv.map.resize(map.size());
  for (std::uint64_t y = 0; y < map.size(); ++y) inv.map[map[y]] = y;
  return inv;
}

void apply_1q(StateVector& sv, const Matrix2& g, int q) {
  check_qubit(sv, q);
  const std::size_t stride = std::size_t{1} << q;
  const std::size_t size = sv.size();
  for (std::size_t base = 0; base < size; base += 2 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      const std::size_t i0 = base + off;
      const std::size_t i1 = i0 + stride;
      const Amplitude a0 = sv[i0], a1 = sv[i1];
      sv[i0] = g.a * a0 + g.b * a1;
      sv[i1] = g.c * a0 + g.d * a1;
    }
  }
}

void apply_controlled_1q(StateVector& sv, int control, const Matrix2& g,
                         int target) {
  check_qubit(sv, control);
  check_qubit(sv, target);
  if (control == target)
    throw std::domain_error("control and target must be distinct");
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  for (std::size_t i = 0; i < sv.size(); ++i) {
    if ((i & cmask) && !(i & tmask)) {
      const std::size_t j = i | tmask;
      const Amplitude a0 = sv[i], a1 = sv[j];
      sv[i] = g.a * a0 + g.b * a1;
      sv[j] = g.c * a0 + g.d * a1;
    }
  }
}

void apply_cnot(StateVector& sv, int control, int target) {
  apply_controlled_1q(sv, control, gate_x(), target);
}

void apply_controlled_phase(StateVector& sv, int q1, int q2, double phi) {
  check_qubit(sv, q1);
  check_qubit(sv, q2);
  if (q1 == q2) throw std::domain_error("B(phi) needs two distinct qubits");
  const std::size_t mask = (std::size_t{1} << q1) | (std::size_t{1} << q2);
  const Amplitude w = std::polar(1.0, phi);
  for (std::size_t i = 0; i < sv.size(); ++i)
    if ((i & mask) == mask) sv[i] *= w;
}

void apply_toffoli(StateVector& sv, int c1, int c2, int target) {
  check_qubit(sv, c1);
  check_qubit(sv, c2);
  check_qubit(sv, target);
  if (c1 == c2 || c1 == target || c2 == target)
    throw std::domain_error("Toffoli qubits must be distinct");
  const std::size_t cmask = (std::size_t{1} << c1) | (std::size_t{1} << c2);
  const std::size_t tmask = std::size_t{1} << target;
  for (std::size_t i = 0; i < sv.size(); ++i)
    if ((i & cmask) == cmask && !(i & tmask)) std::swap(sv[i], sv[i | tmask]);
}

void apply_swap(StateVector& sv, int q1, int q2) {
  check_qubit(sv, q1);
  check_qubit(sv, q2);
  if (q1 == q2) return;
  const std::size_t m1 = std::size_t{1} << q1;
  const std::size_t m2 = std::size_t{1} << q2;
  for (std::size_t i = 0; i < sv.size(); ++i)
    if ((i & m1) && !(i & m2)) std::swap(sv[i], sv[(i & ~m1) | m2]);
}

void apply_permutation(StateVector& sv, const std::vector<int>& targets,
                       const BasisPermutation& perm, int control) {
  for (int q : targets) check_qubit(sv, q);
  if (control >= 0) {
    check_qubit(sv, control);
    for (int q : targets)
      if (q == control)
        throw std::domain_error("control overlaps permutation targets");
  }
  if (perm.map.size() != (std::size_t{1} << targets.size()))
    throw std::domain_error("permutation size does not match target range");
  if (!perm.is_bijection())
    throw std::domain_error("permutation is not a bijection");

  const std::size_t cmask = control >= 0 ? (std::size_t{1} << control) : 0;
  std::vector<Amplitude> out(sv.size());
  for (std::size_t i = 0; i < sv.size(); ++i) {
    if (cmask && !(i & cmask)) {
      out[i] += sv[i];
      continue;
    }
    std::uint64_t y = 0;
    for (std::size_t b = 0; b < targets.size(); ++b)
      y |= ((i >> targets[b]) & 1u) << b;
    const std::uint64_t py = perm.map[y];
    std::size_t j = i;
    for (std::size_t b = 0; b < targets.size(); ++b) {
      const std::size_t m = std::size_t{1} << targets[b];
      if ((py >> b) & 1u)
        j |= m;
      else
        j &= ~m;
    }
    out[j] += sv[i];
  }
  sv.amplitudes() = std::move(out);
}

StateVector prepare_1q(double theta, double phi) {
  StateVector sv(1);
  apply_1q(sv, gate_h(), 0);
  apply_1q(sv, gate_phase(2.0 * theta), 0);
  apply_1q(sv, gate_h(), 0);
  apply_1q(sv, gate_phase(std::numbers::pi / 2.0 + phi), 0);
  return sv;
}

}  // namespace qsim
