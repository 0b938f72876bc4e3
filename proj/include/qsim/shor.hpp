#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsim/algorithms.hpp"
#include "qsim/numtheory.hpp"
#include "qsim/qstate.hpp"

namespace qsim {

/// Multiplication by a modulo N on m qubits (2^m > N): |y> -> |a y mod N>
/// for y < N, identity on the out-of-range states.
class ModMulOperator : public ControlledUnitary {
 public:
  ModMulOperator(nt::Natural a, nt::Natural N, int m);

  int num_target_qubits() const override { return m_; }
  void apply(StateVector& sv) const override;
  void apply_controlled_power(StateVector& sv, int control, int j) const override;

  BasisPermutation permutation() const { return permutation_for(a_); }
  /// Permutation of U_a^{2^j}, with the power reduced by repeated squaring.
  BasisPermutation power_permutation(int j) const;

  nt::Natural a() const { return a_; }
  nt::Natural modulus() const { return N_; }

 private:
  BasisPermutation permutation_for(nt::Natural mult) const;

  nt::Natural a_, N_;
  int m_;
};

ModMulOperator mod_mul_operator(nt::Natural a, nt::Natural N, int m);

/// |u_k> = r^{-1/2} sum_j e^{-2 pi i k j / r} |a^j mod N>, an eigenvector of
/// U_a with eigenvalue e^{2 pi i k / r}.
StateVector eigenvector_u_k(nt::Natural a, nt::Natural N, nt::Natural k);

struct OrderResult {
  nt::Natural r = 0;
  nt::Convergent k_over_r{0, 1};
  std::uint64_t raw_measurement = 0;
  int precision_bits = 0;
  bool succeeded = false;
};

/// Phase estimation on U_a with the second register in |1>, followed by
/// continued-fraction post-processing. precision_override sets the counting
/// register size; 0 means the default n = 2m + 1.
OrderResult quantum_order_find(nt::Natural a, nt::Natural N,
                               std::uint64_t rng_seed,
                               int precision_override = 0);

/// Post-processing alone: from measurement x with n counting bits, find the
/// convergent p/q of x/2^n with q < 2^m and |x/2^n - p/q| < 1/2^n, and
/// verify a^q = 1 mod N.
OrderResult order_from_measurement(nt::Natural a, nt::Natural N, int m, int n,
                                   std::uint64_t x);

/// Exact measurement distribution of the order-finding register.
std::vector<double> order_find_distribution(nt::Natural a, nt::Natural N,
                                            int n);

struct FactorResult {
  nt::Natural factor = 0;
  bool succeeded = false;
  int attempts_used = 0;
  std::vector<std::string> log;
};

/// Full factoring pipeline: trivial-case handling, random base selection,
/// quantum order finding, and the gcd(a^{r/2} +- 1, N) extraction.
FactorResult shor_factor(nt::Natural N, std::uint64_t rng_seed,
                         int max_attempts = 20);

}  // namespace qsim
