#include "qsim/shor.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsim {

namespace {

int bits_for(nt::Natural N) {
  int m = 1;
  while ((nt::Natural{1} << m) < N) ++m;
  return m;
}

std::vector<int> low_targets(int m) {
  std::vector<int> t(m);
  for (int i = 0; i < m; ++i) t[i] = i;
  return t;
}

}  // namespace

ModMulOperator::ModMulOperator(nt::Natural a, nt::Natural N, int m)
    : a_(a % N), N_(N), m_(m) {
  if (N < 2) throw std::domain_error("modulus must be at least 2");
  if (m < 1 || m > kMaxQubits || (nt::Natural{1} << m) < N)
    throw std::domain_error("need 2^m >= N within the qubit cap");
  if (nt::gcd(a_, N_) != 1)
    throw std::domain_error("multiplier must be coprime to the modulus");
}

BasisPermutation ModMulOperator::permutation_for(nt::Natural mult) const {
  BasisPermutation p;
  p.map.resize(std::uint64_t{1} << m_);
  for (std::uint64_t y = 0; y < p.map.size(); ++y)
    p.map[y] = y < N_ ? nt::mod_mul(mult, y, N_) : y;
  return p;
}

BasisPermutation ModMulOperator::power_permutation(int j) const {
  nt::Natural mult = a_;
  for (int i = 0; i < j; ++i) mult = nt::mod_mul(mult, mult, N_);
  return permutation_for(mult);
}

void ModMulOperator::apply(StateVector& sv) const {
  apply_permutation(sv, low_targets(m_), permutation());
}

void ModMulOperator::apply_controlled_power(StateVector& sv, int control,
                                            int j) const {
  apply_permutation(sv, low_targets(m_), power_permutation(j), control);
}

ModMulOperator mod_mul_operator(nt::Natural a, nt::Natural N, int m) {
  return ModMulOperator(a, N, m);
}

StateVector eigenvector_u_k(nt::Natural a, nt::Natural N, nt::Natural k) {
  const nt::Natural r = nt::order_classical(a, N);
  if (k < 1 || k > r) throw std::domain_error("expected 1 <= k <= r");
  StateVector sv(bits_for(N));
  sv[0] = Amplitude{0.0, 0.0};
  const double scale = 1.0 / std::sqrt(double(r));
  nt::Natural aj = 1;
  for (nt::Natural j = 0; j < r; ++j) {
    const double angle = -2.0 * std::numbers::pi * double(k) * double(j) / double(r);
    sv[aj] += std::polar(scale, angle);
    aj = nt::mod_mul(aj, a, N);
  }
  return sv;
}

std::vector<double> order_find_distribution(nt::Natural a, nt::Natural N,
                                            int n) {
  const int m = bits_for(N);
  ModMulOperator op(a, N, m);
  return phase_estimation_distribution(op, StateVector::basis(m, 1), n);
}

OrderResult order_from_measurement(nt::Natural a, nt::Natural N, int m, int n,
                                   std::uint64_t x) {
  OrderResult out;
  out.raw_measurement = x;
  out.precision_bits = n;

  const nt::Natural denom = nt::Natural{1} << n;
  const nt::Natural q_bound = nt::Natural{1} << m;
  // |x/2^n - p/q| < 1/2^n  <=>  |x q - p 2^n| < q, exact in integers.
  nt::Convergent chosen{0, 1};
  bool found = false;
  for (const auto& c : nt::convergents(x, denom)) {
    if (c.q >= q_bound) break;
    const auto lhs = (__int128)x * c.q - (__int128)c.p * denom;
    const auto diff = lhs < 0 ? -lhs : lhs;
    if (diff < (__int128)c.q) {
      chosen = c;
      found = true;  // keep the last (largest-q) eligible convergent
    }
  }
  out.k_over_r = chosen;
  if (!found || chosen.p == 0) return out;  // x near 0: trivial convergent

  nt::Natural q = chosen.q;
  if (nt::mod_pow(a, q, N) != 1) return out;  // k, r not coprime: retry
  // Reduce to the minimal order dividing q.
  for (nt::Natural d = 2; d * d <= q; ++d) {
    while (q % d == 0 && nt::mod_pow(a, q / d, N) == 1) q /= d;
  }
  out.r = q;
  out.succeeded = true;
  return out;
}

OrderResult quantum_order_find(nt::Natural a, nt::Natural N,
                               std::uint64_t rng_seed, int precision_override) {
  const int m = bits_for(N);
  const int n = precision_override > 0 ? precision_override : 2 * m + 1;
  if (m + n > kMaxQubits)
    throw std::domain_error("order finding exceeds the qubit cap");
  const auto dist = order_find_distribution(a, N, n);
  Prng rng(rng_seed);
  const std::uint64_t x = sample_index(dist, rng);
  return order_from_measurement(a, N, m, n, x);
}

FactorResult shor_factor(nt::Natural N, std::uint64_t rng_seed,
                         int max_attempts) {
  FactorResult out;
  if (N < 4) throw std::domain_error("nothing to factor: N must be composite");
  if (N % 2 == 0) {
    out.factor = 2;
    out.succeeded = true;
    out.log.push_back("N is even: factor 2");
    return out;
  }
  if (nt::is_prime(N)) throw std::domain_error("N is prime, not composite");
  if (auto pp = nt::prime_power(N)) {
    out.factor = pp->first;
    out.succeeded = true;
    out.log.push_back("N is a prime power: classical factor " +
                      std::to_string(pp->first));
    return out;
  }

  Prng master(rng_seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    ++out.attempts_used;
    Prng stream(master.next_u64());
    const nt::Natural a = 2 + stream.next_u64() % (N - 2);
    const nt::Natural g = nt::gcd(a, N);
    if (g != 1) {
      out.factor = g;
      out.succeeded = true;
      out.log.push_back("a=" + std::to_string(a) + ": gcd(a,N)=" +
                        std::to_string(g) + " is already a factor");
      return out;
    }
    const OrderResult ord = quantum_order_find(a, N, stream.next_u64());
    if (!ord.succeeded) {
      out.log.push_back("a=" + std::to_string(a) +
                        ": order finding failed (x=" +
                        std::to_string(ord.raw_measurement) + ")");
      continue;
    }
    if (ord.r % 2 != 0) {
      out.log.push_back("a=" + std::to_string(a) + ": odd order r=" +
                        std::to_string(ord.r) + ", retry");
      continue;
    }
    const nt::Natural half = nt::mod_pow(a, ord.r / 2, N);
    if (half == N - 1 || half == 1) {
      out.log.push_back("a=" + std::to_string(a) + ": a^{r/2} = +-1 mod N, retry");
      continue;
    }
    for (nt::Natural f : {nt::gcd(half - 1, N), nt::gcd(half + 1, N)}) {
      if (f > 1 && f < N) {
        out.factor = f;
        out.succeeded = true;
        out.log.push_back("a=" + std::to_string(a) + ": r=" +
                          std::to_string(ord.r) + ", factor " +
                          std::to_string(f));
        return out;
      }
    }
    out.log.push_back("a=" + std::to_string(a) + ": no nontrivial gcd, retry");
  }
  out.log.push_back("attempts exhausted");
  return out;
}

}  // namespace qsim
