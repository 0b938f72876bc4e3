#include "qsim/numtheory.hpp"

#include <cmath>

namespace qsim::nt {

Natural mod_mul(Natural a, Natural b, Natural n) {
  if (n == 0) throw std::domain_error("modulus must be positive");
  return Natural((unsigned __int128)(a % n) * (b % n) % n);
}

Natural mod_pow(Natural a, Natural e, Natural n) {
  if (n == 0) throw std::domain_error("modulus must be positive");
  Natural result = 1 % n;
  Natural base = a % n;
  while (e > 0) {
    if (e & 1) result = mod_mul(result, base, n);
    base = mod_mul(base, base, n);
    e >>= 1;
  }
  return result;
}

GcdTrace gcd_trace(Natural x, Natural y) {
  if (x == 0 && y == 0) throw std::domain_error("gcd(0, 0) is undefined");
  GcdTrace out;
  while (y != 0) {
    out.trace.emplace_back(x, y);
    Natural r = x % y;
    x = y;
    y = r;
  }
  out.trace.emplace_back(x, Natural{0});
  out.g = x;
  return out;
}

Natural gcd(Natural x, Natural y) {
  while (y != 0) {
    Natural r = x % y;
    x = y;
    y = r;
  }
  return x;
}

Natural mod_inverse(Natural a, Natural n) {
  if (n == 0) throw std::domain_error("modulus must be positive");
  // Extended Euclid on (a mod n, n), tracking only the coefficient of a.
  Natural r0 = a % n, r1 = n;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    Natural q = r0 / r1;
    Natural r2 = r0 - q * r1;
    std::int64_t s2 = s0 - std::int64_t(q) * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw NotInvertible(a, n);
  std::int64_t d = s0 % std::int64_t(n);
  if (d < 0) d += std::int64_t(n);
  return Natural(d);
}

std::vector<Convergent> convergents(Natural x, Natural denom) {
  if (denom == 0) throw std::domain_error("denominator must be positive");
  if (x > denom) throw std::domain_error("expected x <= denom");
  std::vector<Convergent> out;
  // p_k = a_k p_{k-1} + p_{k-2}, q_k likewise, over the Euclid quotients.
  Natural p_prev = 1, q_prev = 0;  // k = -1
  Natural p = 0, q = 1;            // first convergent 0/1 when a_0 = 0
  Natural num = x, den = denom;
  bool first = true;
  while (true) {
    Natural a = num / den;
    Natural rem = num % den;
    if (first) {
      p = a;  // a_0; with x <= denom this is 0 or 1
      q = 1;
      first = false;
    } else {
      Natural p_next = a * p + p_prev;
      Natural q_next = a * q + q_prev;
      p_prev = p;
      q_prev = q;
      p = p_next;
      q = q_next;
    }
    out.push_back({p, q});
    if (rem == 0) break;
    num = den;
    den = rem;
  }
  return out;
}

bool is_prime(Natural n) {
  if (n < 2) throw std::domain_error("primality is defined for n >= 2");
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Natural d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<Natural, int>> prime_power(Natural n) {
  if (n < 2) throw std::domain_error("prime_power is defined for n >= 2");
  if (is_prime(n)) return std::make_pair(n, 1);
  // n = p^alpha implies p = round(n^{1/alpha}); scan alpha up to log2(n).
  for (int alpha = 2; (Natural{1} << alpha) <= n && alpha < 64; ++alpha) {
    Natural p = Natural(std::llround(std::pow(double(n), 1.0 / alpha)));
    for (Natural cand = (p > 2 ? p - 2 : 2); cand <= p + 2; ++cand) {
      unsigned __int128 acc = 1;
      for (int i = 0; i < alpha && acc <= n; ++i) acc *= cand;
      if (acc == n && is_prime(cand)) return std::make_pair(cand, alpha);
    }
  }
  return std::nullopt;
}

Natural order_classical(Natural a, Natural N) {
  if (N < 2) throw std::domain_error("order is defined for N >= 2");
  if (gcd(a % N, N) != 1)
    throw std::domain_error("order requires gcd(a, N) = 1");
  Natural r = 1;
  Natural acc = a % N;
  while (acc != 1) {
    acc = mod_mul(acc, a, N);
    ++r;
  }
  return r;
}

}  // namespace qsim::nt
