#include "qsim/qstate.hpp"

#include <cmath>
#include <stdexcept>

namespace qsim {

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw std::domain_error("register needs at least one qubit");
  if (num_qubits > kMaxQubits)
    throw std::domain_error("register capacity exceeded (max " +
                            std::to_string(kMaxQubits) + " qubits)");
  amps_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amps_[0] = Amplitude{1.0, 0.0};
}

StateVector StateVector::basis(int num_qubits, BasisIndex a) {
  StateVector sv(num_qubits);
  if (a >= sv.size()) throw std::domain_error("basis index out of range");
  sv.amps_[0] = Amplitude{0.0, 0.0};
  sv.amps_[a] = Amplitude{1.0, 0.0};
  return sv;
}

double StateVector::norm_sq() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

StateVector basis_state(int num_qubits, BasisIndex a) {
  return StateVector::basis(num_qubits, a);
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  int n = a.num_qubits() + b.num_qubits();
  StateVector out(n);
  const std::size_t nb = b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < nb; ++j) out[i * nb + j] = a[i] * b[j];
  return out;
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::domain_error("inner product needs equal register sizes");
  Amplitude s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

std::vector<double> probabilities(const StateVector& sv) {
  std::vector<double> p(sv.size());
  for (std::size_t i = 0; i < sv.size(); ++i) p[i] = std::norm(sv[i]);
  return p;
}

std::vector<double> partial_probabilities(const StateVector& sv,
                                          const std::vector<int>& qubits) {
  for (int q : qubits)
    if (q < 0 || q >= sv.num_qubits())
      throw std::domain_error("qubit index out of range");
  std::vector<double> p(std::size_t{1} << qubits.size(), 0.0);
  for (std::size_t i = 0; i < sv.size(); ++i) {
    std::size_t key = 0;
    for (std::size_t b = 0; b < qubits.size(); ++b)
      key |= ((i >> qubits[b]) & 1u) << b;
    p[key] += std::norm(sv[i]);
  }
  return p;
}

std::uint64_t Prng::next_u64() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Prng::next_unit() { return (next_u64() >> 11) * 0x1.0p-53; }

std::size_t sample_index(const std::vector<double>& dist, Prng& rng) {
  double u = rng.next_unit();
  double acc = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    acc += dist[i];
    if (u < acc) return i;
  }
  return dist.size() - 1;  // guards against rounding in the tail
}

BasisIndex measure(const StateVector& sv, std::uint64_t rng_seed) {
  Prng rng(rng_seed);
  return sample_index(probabilities(sv), rng);
}

}  // namespace qsim
