#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qsim::nt {

// Exact integer arithmetic on 64-bit naturals; every product goes through
// 128-bit intermediates so nothing silently wraps.
using Natural = std::uint64_t;

class NotInvertible : public std::domain_error {
 public:
  NotInvertible(Natural a, Natural n)
      : std::domain_error("no inverse: gcd(" + std::to_string(a) + ", " +
                          std::to_string(n) + ") != 1") {}
};

Natural mod_mul(Natural a, Natural b, Natural n);

/// a^e mod n by square-and-multiply.
Natural mod_pow(Natural a, Natural e, Natural n);

struct GcdTrace {
  Natural g;
  std::vector<std::pair<Natural, Natural>> trace;  // successive (r_j, r_{j+1})
};

GcdTrace gcd_trace(Natural x, Natural y);
Natural gcd(Natural x, Natural y);

/// d in {0..n-1} with a*d = 1 mod n; throws NotInvertible otherwise.
Natural mod_inverse(Natural a, Natural n);

struct Convergent {
  Natural p;
  Natural q;
};

/// All continued-fraction convergents of x/denom, ending with x/denom in
/// lowest terms. convergents(0, d) is just [0/1].
std::vector<Convergent> convergents(Natural x, Natural denom);

bool is_prime(Natural n);

/// (p, alpha) iff n = p^alpha with p prime, alpha >= 1.
std::optional<std::pair<Natural, int>> prime_power(Natural n);

/// Least r > 0 with a^r = 1 mod N; requires gcd(a, N) = 1.
Natural order_classical(Natural a, Natural N);

}  // namespace qsim::nt
