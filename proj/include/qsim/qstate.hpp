#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qsim {

using Amplitude = std::complex<double>;
using BasisIndex = std::uint64_t;

// Register sizes are capped so a state never exceeds 2^24 amplitudes.
inline constexpr int kMaxQubits = 24;

// Default comparison tolerance for floating-point checks.
inline constexpr double kTol = 1e-10;

/// 2^n complex amplitudes over an n-qubit register. Qubit 0 is the least
/// significant bit of a basis index.
class StateVector {
 public:
  explicit StateVector(int num_qubits);

  static StateVector basis(int num_qubits, BasisIndex a);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amps_.size(); }

  Amplitude& operator[](std::size_t i) { return amps_[i]; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

  std::vector<Amplitude>& amplitudes() { return amps_; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }

  double norm_sq() const;

 private:
  int num_qubits_;
  std::vector<Amplitude> amps_;
};

StateVector basis_state(int num_qubits, BasisIndex a);

/// Amplitude at index i*2^{n_b}+j is a[i]*b[j]: b occupies the low qubits.
StateVector tensor(const StateVector& a, const StateVector& b);

Amplitude inner_product(const StateVector& a, const StateVector& b);

std::vector<double> probabilities(const StateVector& sv);

/// Marginal distribution over the listed qubits, in the order given
/// (qubits[0] is the least significant bit of the outcome index).
std::vector<double> partial_probabilities(const StateVector& sv,
                                          const std::vector<int>& qubits);

/// Samples a basis index from probabilities(sv). The generator is a fixed
/// splitmix64 stream so identical seeds give identical samples everywhere.
BasisIndex measure(const StateVector& sv, std::uint64_t rng_seed);

/// Deterministic 64-bit PRNG (splitmix64) used for all sampling.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64();
  double next_unit();  // uniform in [0,1)

 private:
  std::uint64_t state_;
};

/// Draws one index from an explicit distribution (inverse CDF walk).
std::size_t sample_index(const std::vector<double>& dist, Prng& rng);

}  // namespace qsim
