#include "qsim/algorithms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsim {

using std::numbers::pi;

namespace {

StateVector minus_state() {
  StateVector m(1);
  m[0] = Amplitude{std::numbers::sqrt2 / 2.0, 0.0};
  m[1] = Amplitude{-std::numbers::sqrt2 / 2.0, 0.0};
  return m;
}

}  // namespace

QueryResult deutsch(const Oracle& f) {
  if (f.n_in != 1 || f.m_out != 1)
    throw std::domain_error("deutsch expects a 1-bit oracle");
  return deutsch_jozsa(f);
}

QueryResult deutsch_jozsa(const Oracle& f) {
  if (f.m_out != 1)
    throw std::domain_error("deutsch_jozsa expects a single output bit");
  const int n = f.n_in;
  // First register |0..0>, ancilla in (|0> - |1>)/sqrt(2).
  StateVector sv = tensor(minus_state(), StateVector(n));
  const Matrix2 h = gate_h();
  for (int q = 0; q < n; ++q) apply_1q(sv, h, q);
  apply_oracle(sv, f);
  for (int q = 0; q < n; ++q) apply_1q(sv, h, q);

  std::vector<int> first(n);
  for (int q = 0; q < n; ++q) first[q] = q;
  const auto p = partial_probabilities(sv, first);
  return {p[0] > 0.5 ? PromiseClass::Constant : PromiseClass::Balanced, 1};
}

StateVector grover_iterate(StateVector sv, BasisIndex k) {
  if (k >= sv.size()) throw std::domain_error("tagged index out of range");
  sv[k] = -sv[k];          // R_k
  hadamard_all(sv);        // R_S = H R_0 H
  sv[0] = -sv[0];
  hadamard_all(sv);
  return sv;
}

StateVector grover_iterate_explicit(StateVector sv, BasisIndex k) {
  const int n = sv.num_qubits();
  if (k >= sv.size()) throw std::domain_error("tagged index out of range");
  StateVector ext = tensor(minus_state(), sv);

  Oracle f_k;
  f_k.n_in = n;
  f_k.m_out = 1;
  f_k.table.assign(sv.size(), 0);
  f_k.table[k] = 1;
  Oracle f_0 = f_k;
  f_0.table[k] = 0;
  f_0.table[0] = 1;

  const Matrix2 h = gate_h();
  apply_oracle(ext, f_k);
  for (int q = 0; q < n; ++q) apply_1q(ext, h, q);
  apply_oracle(ext, f_0);
  for (int q = 0; q < n; ++q) apply_1q(ext, h, q);

  // The ancilla factors out unchanged; project it away.
  StateVector out(n);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = ext[i] * std::numbers::sqrt2;
  return out;
}

int grover_iteration_count(int n) {
  const double phi = std::asin(std::pow(2.0, -n / 2.0));
  return int(std::floor(pi / (4.0 * phi) - 0.25 + 0.5));
}

std::vector<double> grover_distribution(int n, BasisIndex k) {
  StateVector sv(n);
  hadamard_all(sv);  // |S>
  const int m = grover_iteration_count(n);
  for (int i = 0; i < m; ++i) sv = grover_iterate(std::move(sv), k);
  return probabilities(sv);
}

GroverResult grover_search(int n, BasisIndex k, std::uint64_t rng_seed) {
  const auto dist = grover_distribution(n, k);
  Prng rng(rng_seed);
  return {sample_index(dist, rng), grover_iteration_count(n), dist[k]};
}

void PhaseUnitary::apply(StateVector& sv) const {
  apply_1q(sv, gate_phase(2.0 * pi * turns_), 0);
}

void PhaseUnitary::apply_controlled_power(StateVector& sv, int control,
                                          int j) const {
  double t = std::fmod(turns_, 1.0);
  for (int i = 0; i < j; ++i) t = std::fmod(2.0 * t, 1.0);
  apply_controlled_phase(sv, control, 0, 2.0 * pi * t);
}

namespace {

StateVector run_estimation_network(const ControlledUnitary& op,
                                   const StateVector& u, int n) {
  const int m = op.num_target_qubits();
  if (u.num_qubits() != m)
    throw std::domain_error("eigenstate register size mismatch");
  StateVector sv = tensor(StateVector(n), u);
  const Matrix2 h = gate_h();
  for (int j = 0; j < n; ++j) apply_1q(sv, h, m + j);
  for (int j = 0; j < n; ++j) op.apply_controlled_power(sv, m + j, j);
  sv = inverse_qft(n).shifted(m, m + n).run(std::move(sv));
  return sv;
}

}  // namespace

std::vector<double> phase_estimation_distribution(const ControlledUnitary& op,
                                                  const StateVector& u, int n) {
  const int m = op.num_target_qubits();
  StateVector sv = run_estimation_network(op, u, n);
  std::vector<int> counting(n);
  for (int j = 0; j < n; ++j) counting[j] = m + j;
  return partial_probabilities(sv, counting);
}

PhaseEstimate phase_estimate(const ControlledUnitary& op, const StateVector& u,
                             int n, std::uint64_t rng_seed, double eigen_tol) {
  StateVector uu = u;
  op.apply(uu);
  Amplitude lambda = inner_product(u, uu);
  const double mag = std::abs(lambda);
  if (mag > 0) lambda /= mag;
  double residual_sq = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    residual_sq += std::norm(uu[i] - lambda * u[i]);
  if (std::sqrt(residual_sq) > eigen_tol)
    throw std::invalid_argument("input is not an eigenstate of the operator");

  const auto dist = phase_estimation_distribution(op, u, n);
  Prng rng(rng_seed);
  return {sample_index(dist, rng), n};
}

std::vector<std::uint64_t> best_estimates(double turns, int n) {
  const double scaled = (turns - std::floor(turns)) * double(1 << n);
  const std::uint64_t size = std::uint64_t{1} << n;
  const std::uint64_t lo = std::uint64_t(std::floor(scaled)) % size;
  const std::uint64_t hi = (lo + 1) % size;
  const double d_lo = scaled - std::floor(scaled);
  const double d_hi = 1.0 - d_lo;
  std::vector<std::uint64_t> out;
  if (d_lo <= d_hi + 1e-12) out.push_back(lo);
  if (d_hi <= d_lo + 1e-12 && hi != lo) out.push_back(hi);
  return out;
}

}  // namespace qsim
