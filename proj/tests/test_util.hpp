#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "qsim/qstate.hpp"

namespace qsim::testutil {

inline double max_abs_diff(const std::vector<Amplitude>& a,
                           const std::vector<Amplitude>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double state_diff(const StateVector& a, const StateVector& b) {
  return max_abs_diff(a.amplitudes(), b.amplitudes());
}

/// max |a - lambda b| with lambda aligned on the largest entry of b.
inline double diff_up_to_phase(const std::vector<Amplitude>& a,
                               const std::vector<Amplitude>& b) {
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (std::abs(b[i]) > std::abs(b[pivot])) pivot = i;
  const Amplitude lambda = a[pivot] / b[pivot];
  std::vector<Amplitude> scaled = b;
  for (auto& v : scaled) v *= lambda;
  return max_abs_diff(a, scaled);
}

inline StateVector random_state(int n, Prng& rng) {
  StateVector sv(n);
  double norm = 0.0;
  for (std::size_t i = 0; i < sv.size(); ++i) {
    sv[i] = Amplitude{rng.next_unit() - 0.5, rng.next_unit() - 0.5};
    norm += std::norm(sv[i]);
  }
  for (std::size_t i = 0; i < sv.size(); ++i) sv[i] /= std::sqrt(norm);
  return sv;
}

}  // namespace qsim::testutil
