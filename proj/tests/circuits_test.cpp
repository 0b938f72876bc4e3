#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "qsim/circuits.hpp"
#include "test_util.hpp"

using namespace qsim;
using testutil::diff_up_to_phase;
using testutil::max_abs_diff;
using testutil::random_state;
using testutil::state_diff;

namespace {

std::vector<Amplitude> dft_matrix(int n) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Amplitude> m(dim * dim);
  const double scale = 1.0 / std::sqrt(double(dim));
  for (std::size_t y = 0; y < dim; ++y)
    for (std::size_t x = 0; x < dim; ++x)
      m[x * dim + y] =
          std::polar(scale, 2.0 * std::numbers::pi * double(x) * double(y) /
                                double(dim));
  return m;  // column y = image of |y>
}

StateVector minus_state() {
  StateVector sv(1);
  sv[0] = Amplitude{std::numbers::sqrt2 / 2.0, 0.0};
  sv[1] = Amplitude{-std::numbers::sqrt2 / 2.0, 0.0};
  return sv;
}

}  // namespace

TEST_CASE("circuit run and validation") {
  Circuit h3(3);
  for (int q = 0; q < 3; ++q) h3.add(GateSpec::matrix_1q("H", gate_h()), {q});
  const StateVector out = h3.run(StateVector(3));
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(std::abs(out[i] - Amplitude{std::pow(2.0, -1.5), 0}) < kTol);

  const Circuit empty(2);
  Prng rng(4);
  const StateVector psi = random_state(2, rng);
  CHECK(state_diff(empty.run(psi), psi) < kTol);

  Circuit bad(2);
  CHECK_THROWS_AS(bad.add(GateSpec::controlled("c-NOT", gate_x()), {1, 1}),
                  std::domain_error);
  CHECK_THROWS_AS(bad.add(GateSpec::matrix_1q("H", gate_h()), {2}),
                  std::domain_error);
  CHECK_THROWS_AS(empty.run(StateVector(3)), std::domain_error);
}

TEST_CASE("circuit inverse composes to the identity") {
  Circuit c(3);
  c.add(GateSpec::matrix_1q("H", gate_h()), {0});
  c.add(GateSpec::controlled_phase(0.9), {0, 2});
  c.add(GateSpec::controlled("c-V", gate_v()), {1, 2});
  c.add(GateSpec::toffoli(), {0, 1, 2});
  BasisPermutation cycle;
  cycle.map = {1, 2, 3, 0};
  c.add(GateSpec::permutation("CYCLE", cycle), {0, 2});
  c.add(GateSpec::swap(), {0, 1});

  Prng rng(8);
  const StateVector psi = random_state(3, rng);
  CHECK(state_diff(c.inverse().run(c.run(psi)), psi) < kTol);
}

TEST_CASE("hadamard_all") {
  Prng rng(15);
  for (int n = 1; n <= 6; ++n) {
    StateVector psi = random_state(n, rng);
    const StateVector before = psi;
    hadamard_all(psi);
    hadamard_all(psi);
    CHECK(state_diff(psi, before) < kTol);
  }

  StateVector y = basis_state(3, 5);
  hadamard_all(y);
  for (std::uint64_t x = 0; x < 8; ++x) {
    const int parity = std::popcount(x & 5u) & 1;
    CHECK(std::abs(y[x] - Amplitude{(parity ? -1.0 : 1.0) *
                                        std::pow(2.0, -1.5),
                                    0}) < kTol);
  }
  CHECK(y[6].real() < 0.0);  // sign at |110>
}

TEST_CASE("qft matches the Fourier matrix") {
  CHECK(qft(1).steps().size() == 1);
  CHECK(elementary_gate_count(qft(4)) == 10);

  for (int n = 1; n <= 6; ++n) {
    CHECK(elementary_gate_count(qft(n)) == n * (n + 1) / 2);
    CHECK(max_abs_diff(unitary_of(qft(n)), dft_matrix(n)) < kTol);
  }

  const StateVector uniform = qft(3).run(StateVector(3));
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(std::abs(uniform[i] - Amplitude{std::pow(2.0, -1.5), 0}) < kTol);

  Prng rng(23);
  for (int n = 2; n <= 5; ++n) {
    const StateVector psi = random_state(n, rng);
    CHECK(state_diff(inverse_qft(n).run(qft(n).run(psi)), psi) < kTol);
  }
}

TEST_CASE("bit-reversed qft differs only by the swap network") {
  const int n = 4;
  const std::size_t dim = 16;
  const auto raw = unitary_of(qft(n, true));
  const auto full = unitary_of(qft(n));
  auto rev = [&](std::size_t i) {
    std::size_t r = 0;
    for (int b = 0; b < n; ++b) r |= ((i >> b) & 1u) << (n - 1 - b);
    return r;
  };
  double diff = 0.0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      diff = std::max(diff,
                      std::abs(raw[rev(i) * dim + j] - full[i * dim + j]));
  CHECK(diff < kTol);
}

TEST_CASE("oracles") {
  const Oracle sq = Oracle::from_function(
      2, 3, [](std::uint64_t x) -> std::uint64_t { return (x * x) % 8; });
  StateVector sv = basis_state(5, 3);  // |x=11>|y=000>
  apply_oracle(sv, sq);
  CHECK(std::abs(sv[(1u << 2) | 3u] - Amplitude{1, 0}) < kTol);  // y = 001

  const Oracle zero = Oracle::from_function(
      3, 2, [](std::uint64_t) -> std::uint64_t { return 0; });
  Prng rng(6);
  StateVector psi = random_state(5, rng);
  const StateVector before = psi;
  apply_oracle(psi, zero);
  CHECK(state_diff(psi, before) < kTol);

  for (int n_in = 1; n_in <= 4; ++n_in) {
    const Oracle parity = Oracle::from_function(
        n_in, 1,
        [](std::uint64_t x) -> std::uint64_t { return std::popcount(x) & 1; });
    CHECK(oracle_permutation(parity).is_bijection());
    StateVector s = random_state(n_in + 1, rng);
    const StateVector b = s;
    apply_oracle(s, parity);
    apply_oracle(s, parity);  // adding f twice mod 2 is the identity
    CHECK(state_diff(s, b) < kTol);
  }

  Oracle bad;
  bad.n_in = 1;
  bad.m_out = 1;
  bad.table = {0, 2};
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
  CHECK_THROWS_AS(apply_oracle(sv, Oracle::from_function(
                                       5, 1, [](std::uint64_t) -> std::uint64_t {
                                         return 0;
                                       })),
                  std::domain_error);
}

TEST_CASE("phase kickback") {
  for (int table = 0; table < 4; ++table) {
    Oracle f;
    f.n_in = 1;
    f.m_out = 1;
    f.table = {std::uint64_t(table & 1), std::uint64_t(table >> 1)};
    for (std::uint64_t x = 0; x < 2; ++x) {
      StateVector sv = tensor(minus_state(), basis_state(1, x));
      const StateVector before = sv;
      apply_oracle(sv, f);
      const double sign = f.table[x] ? -1.0 : 1.0;
      StateVector want = before;
      for (std::size_t i = 0; i < want.size(); ++i) want[i] *= sign;
      CHECK(state_diff(sv, want) < kTol);
    }
  }
}

TEST_CASE("eigenvalue kickback state") {
  CHECK(state_diff(eigenvalue_kickback_state(1), minus_state()) < kTol);

  for (int m = 1; m <= 3; ++m) {
    const StateVector u = eigenvalue_kickback_state(m);
    for (int n_in = 1; n_in <= 3; ++n_in) {
      const Oracle f = Oracle::from_function(
          n_in, m, [m](std::uint64_t x) -> std::uint64_t {
            return (3 * x + 1) % (std::uint64_t{1} << m);
          });
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n_in); ++x) {
        StateVector sv = tensor(u, basis_state(n_in, x));
        apply_oracle(sv, f);
        StateVector want = tensor(u, basis_state(n_in, x));
        const Amplitude w = std::polar(
            1.0, 2.0 * std::numbers::pi * double(f.table[x]) /
                     double(std::uint64_t{1} << m));
        for (std::size_t i = 0; i < want.size(); ++i) want[i] *= w;
        CHECK(state_diff(sv, want) < kTol);
      }
    }
  }
}

TEST_CASE("half adder truth table") {
  for (std::uint64_t x1 = 0; x1 < 2; ++x1)
    for (std::uint64_t x2 = 0; x2 < 2; ++x2) {
      const std::uint64_t in = (x1 << 2) | (x2 << 1);
      const std::uint64_t want = (x1 << 2) | ((x1 ^ x2) << 1) | (x1 & x2);
      const StateVector out = half_adder().run(basis_state(3, in));
      CHECK(std::abs(out[want] - Amplitude{1, 0}) < kTol);
    }
}

TEST_CASE("mach-zehnder interference") {
  auto [p0a, p1a] = mach_zehnder(0.0, 0.0);
  CHECK(p0a == doctest::Approx(1.0).epsilon(1e-12));
  auto [p0b, p1b] = mach_zehnder(std::numbers::pi, 0.0);
  CHECK(p1b == doctest::Approx(1.0).epsilon(1e-12));
  auto [p0c, p1c] = mach_zehnder(std::numbers::pi / 2.0, 0.0);
  CHECK(p0c == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p1c == doctest::Approx(0.5).epsilon(1e-12));
  for (double phi0 : {0.3, 1.1, 2.9})
    for (double phi1 : {0.0, 0.7}) {
      auto [p0, p1] = mach_zehnder(phi0, phi1);
      CHECK(p0 ==
            doctest::Approx(std::pow(std::cos((phi0 - phi1) / 2.0), 2))
                .epsilon(1e-12));
      CHECK(p1 ==
            doctest::Approx(std::pow(std::sin((phi0 - phi1) / 2.0), 2))
                .epsilon(1e-12));
    }
}

TEST_CASE("c-NOT decomposition is exact") {
  const Circuit c = cnot_from_h_cv();
  std::vector<Amplitude> ref(16, Amplitude{0, 0});
  for (std::size_t j = 0; j < 4; ++j) {
    const std::size_t i = (j & 2) ? j ^ 1 : j;  // control qubit 1, target 0
    ref[i * 4 + j] = Amplitude{1, 0};
  }
  CHECK(max_abs_diff(unitary_of(c), ref) < 1e-12);
  CHECK(state_diff(c.run(basis_state(2, 2)), basis_state(2, 3)) < 1e-12);
  CHECK(state_diff(c.run(basis_state(2, 0)), basis_state(2, 0)) < 1e-12);
}

TEST_CASE("toffoli decomposition") {
  const Circuit c = toffoli_from_h_cv();
  std::vector<Amplitude> ref(64, Amplitude{0, 0});
  for (std::size_t j = 0; j < 8; ++j) {
    const std::size_t i = ((j & 6) == 6) ? j ^ 1 : j;  // controls 2,1, target 0
    ref[i * 8 + j] = Amplitude{1, 0};
  }
  CHECK(diff_up_to_phase(unitary_of(c), ref) < kTol);
  CHECK(state_diff(c.run(basis_state(3, 6)), basis_state(3, 7)) < kTol);
  CHECK(state_diff(c.run(basis_state(3, 2)), basis_state(3, 2)) < kTol);
  for (std::uint64_t x = 0; x < 4; ++x) {
    const std::uint64_t in = x << 1;
    const std::uint64_t want = in | ((x == 3) ? 1 : 0);
    CHECK(std::abs(std::abs(c.run(basis_state(3, in))[want]) - 1.0) < kTol);
  }
}

TEST_CASE("pretty printer and shifted circuits") {
  const std::string dump = qft(4).pretty();
  int lines = 0, swaps = 0;
  std::istringstream in(dump);
  std::string line;
  while (std::getline(in, line)) {
    ++lines;
    if (line.rfind("SWAP", 0) == 0) ++swaps;
  }
  CHECK(lines == 12);
  CHECK(swaps == 2);

  Prng rng(19);
  const StateVector low = random_state(2, rng);
  const StateVector high = tensor(qft(2).run(low), basis_state(1, 0));
  const StateVector shifted =
      qft(2).shifted(1, 3).run(tensor(low, basis_state(1, 0)));
  CHECK(state_diff(shifted, high) < kTol);
}
