#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qsim/gates.hpp"
#include "test_util.hpp"

using namespace qsim;
using testutil::random_state;
using testutil::state_diff;

TEST_CASE("elementary gate matrices") {
  StateVector sv(1);
  apply_1q(sv, gate_h(), 0);
  CHECK(std::abs(sv[0] - Amplitude{std::numbers::sqrt2 / 2.0, 0}) < kTol);
  CHECK(std::abs(sv[1] - Amplitude{std::numbers::sqrt2 / 2.0, 0}) < kTol);

  const Matrix2 id = gate_phase(0.0);
  CHECK(std::abs(id.a - Amplitude{1, 0}) < kTol);
  CHECK(std::abs(id.d - Amplitude{1, 0}) < kTol);

  StateVector one = basis_state(1, 1);
  apply_1q(one, gate_v(), 0);
  apply_1q(one, gate_v(), 0);
  CHECK(std::abs(one[1] - Amplitude{-1, 0}) < kTol);  // V^2 = Z

  for (const Matrix2& g : {gate_h(), gate_phase(0.3), gate_v(), gate_v_dagger(),
                           gate_x(), gate_z(), gate_identity()})
    CHECK(is_unitary(g));
}

TEST_CASE("apply_1q sign pattern and involution") {
  StateVector sv = basis_state(3, 5);  // |101>
  for (int q = 0; q < 3; ++q) apply_1q(sv, gate_h(), q);
  const double u = std::pow(2.0, -1.5);
  const double signs[8] = {+1, -1, +1, -1, -1, +1, -1, +1};
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(std::abs(sv[i] - Amplitude{signs[i] * u, 0}) < kTol);

  StateVector zero = basis_state(1, 0);
  apply_1q(zero, gate_phase(1.1), 0);
  CHECK(std::abs(zero[0] - Amplitude{1, 0}) < kTol);

  Prng rng(2);
  StateVector psi = random_state(3, rng);
  const StateVector before = psi;
  apply_1q(psi, gate_h(), 1);
  CHECK(psi.norm_sq() == doctest::Approx(1.0).epsilon(1e-10));
  apply_1q(psi, gate_h(), 1);
  CHECK(state_diff(psi, before) < kTol);

  CHECK_THROWS_AS(apply_1q(psi, gate_h(), 3), std::domain_error);
}

TEST_CASE("controlled gates") {
  // c-NOT entangles (alpha|0> + beta|1>) (x) |0>.
  StateVector sv(2);
  sv[0] = Amplitude{0.6, 0.0};
  sv[1] = Amplitude{0.0, 0.8};  // qubit 0 is the control here
  apply_cnot(sv, 0, 1);
  CHECK(std::abs(sv[0] - Amplitude{0.6, 0.0}) < kTol);
  CHECK(std::abs(sv[3] - Amplitude{0.0, 0.8}) < kTol);
  CHECK(std::abs(sv[1]) < kTol);

  // Entangled output has Schmidt rank 2: both singular values of the
  // amplitude matrix are away from zero.
  const double m00 = std::norm(sv[0]), m11 = std::norm(sv[3]);
  CHECK(std::sqrt(m00) > 1e-12);
  CHECK(std::sqrt(m11) > 1e-12);
  CHECK(std::abs(sv[0] * sv[3] - sv[1] * sv[2]) > 1e-12);  // determinant

  StateVector b11 = basis_state(2, 3);
  apply_controlled_phase(b11, 0, 1, 0.7);
  CHECK(std::abs(b11[3] - std::polar(1.0, 0.7)) < kTol);

  StateVector control_off = basis_state(2, 0);
  apply_controlled_1q(control_off, 0, gate_h(), 1);
  CHECK(state_diff(control_off, basis_state(2, 0)) < kTol);

  CHECK_THROWS_AS(apply_controlled_1q(b11, 1, gate_h(), 1), std::domain_error);
  CHECK_THROWS_AS(apply_controlled_phase(b11, 0, 0, 0.1), std::domain_error);
}

TEST_CASE("V powers and controlled-V inverse") {
  Prng rng(7);
  StateVector psi = random_state(2, rng);
  const StateVector before = psi;
  for (int i = 0; i < 4; ++i) apply_1q(psi, gate_v(), 0);  // V^4 = I
  CHECK(state_diff(psi, before) < kTol);

  // Three applications of c-V equal (c-V)^dagger.
  StateVector a = before, b = before;
  for (int i = 0; i < 3; ++i) apply_controlled_1q(a, 1, gate_v(), 0);
  apply_controlled_1q(b, 1, gate_v_dagger(), 0);
  CHECK(state_diff(a, b) < kTol);
}

TEST_CASE("disjoint applications commute") {
  Prng rng(13);
  StateVector a = random_state(4, rng);
  StateVector b = a;
  apply_1q(a, gate_h(), 1);
  apply_1q(a, gate_phase(0.4), 3);
  apply_1q(b, gate_phase(0.4), 3);
  apply_1q(b, gate_h(), 1);
  CHECK(state_diff(a, b) < kTol);
}

TEST_CASE("toffoli and swap kernels") {
  for (std::uint64_t x = 0; x < 8; ++x) {
    StateVector sv = basis_state(3, x);
    apply_toffoli(sv, 2, 1, 0);
    const std::uint64_t want = ((x >> 1) & (x >> 2) & 1) ? x ^ 1 : x;
    CHECK(std::abs(sv[want] - Amplitude{1, 0}) < kTol);
  }
  StateVector sv = basis_state(2, 1);
  apply_swap(sv, 0, 1);
  CHECK(std::abs(sv[2] - Amplitude{1, 0}) < kTol);
  CHECK_THROWS_AS(apply_toffoli(sv, 0, 0, 1), std::domain_error);
}

TEST_CASE("basis permutations") {
  BasisPermutation p;
  p.map = {2, 0, 3, 1};
  CHECK(p.is_bijection());
  const BasisPermutation q = p.inverse();
  for (std::uint64_t i = 0; i < 4; ++i) CHECK(q.map[p.map[i]] == i);

  BasisPermutation bad;
  bad.map = {0, 0, 1, 2};
  CHECK(!bad.is_bijection());

  Prng rng(21);
  StateVector psi = random_state(3, rng);
  const StateVector before = psi;
  apply_permutation(psi, {0, 2}, p);
  CHECK(psi.norm_sq() == doctest::Approx(1.0).epsilon(1e-10));
  apply_permutation(psi, {0, 2}, q);
  CHECK(state_diff(psi, before) < kTol);

  CHECK_THROWS_AS(apply_permutation(psi, {0, 1}, bad), std::domain_error);
  CHECK_THROWS_AS(apply_permutation(psi, {0, 1}, p, 1), std::domain_error);
}

TEST_CASE("controlled permutation leaves the off branch alone") {
  BasisPermutation cycle;
  cycle.map = {1, 2, 3, 0};
  Prng rng(31);
  StateVector psi = random_state(3, rng);
  const StateVector before = psi;
  apply_permutation(psi, {0, 1}, cycle, 2);
  for (std::size_t i = 0; i < 4; ++i)  // control bit (qubit 2) clear
    CHECK(std::abs(psi[i] - before[i]) < kTol);
  CHECK(psi.norm_sq() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("single-qubit preparation network") {
  CHECK(state_diff(prepare_1q(0.0, 0.0), basis_state(1, 0)) < 1e-9);

  auto fidelity = [](const StateVector& got, double theta, double phi) {
    StateVector want(1);
    want[0] = Amplitude{std::cos(theta), 0.0};
    want[1] = std::polar(std::sin(theta), phi);
    return std::norm(inner_product(want, got));
  };
  CHECK(fidelity(prepare_1q(std::numbers::pi / 4, 0.0), std::numbers::pi / 4,
                 0.0) > 1.0 - kTol);
  CHECK(fidelity(prepare_1q(std::numbers::pi / 6, std::numbers::pi / 2),
                 std::numbers::pi / 6, std::numbers::pi / 2) > 1.0 - kTol);
}
