#include "qsim/crypto.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qsim/qstate.hpp"
#include "qsim/shor.hpp"

namespace qsim::crypto {

namespace {
constexpr char kPunct[] = {' ', '?', ',', '.'};
}

int encode_symbol(char c) {
  if (c >= 'A' && c <= 'Z') return c - 'A';
  for (int i = 0; i < 4; ++i)
    if (c == kPunct[i]) return 26 + i;
  throw std::domain_error(std::string("unsupported character '") + c + "'");
}

char decode_symbol(int code) {
  if (code >= 0 && code < 26) return char('A' + code);
  if (code >= 26 && code < 30) return kPunct[code - 26];
  throw std::domain_error("code out of range: " + std::to_string(code));
}

std::vector<int> encode_text(const std::string& s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (char c : s) out.push_back(encode_symbol(c));
  return out;
}

std::string decode_text(const std::vector<int>& codes) {
  std::string out;
  out.reserve(codes.size());
  for (int c : codes) out.push_back(decode_symbol(c));
  return out;
}

namespace {

void check_pad(const std::vector<int>& msg, const std::vector<int>& key) {
  if (msg.size() != key.size())
    throw std::domain_error("one-time pad must have the same length as the message");
  for (int c : msg)
    if (c < 0 || c >= kAlphabetSize)
      throw std::domain_error("code out of range: " + std::to_string(c));
  for (int c : key)
    if (c < 0 || c >= kAlphabetSize)
      throw std::domain_error("key code out of range: " + std::to_string(c));
}

}  // namespace

std::vector<int> vernam_encrypt(const std::vector<int>& plain,
                                const std::vector<int>& key) {
  check_pad(plain, key);
  std::vector<int> out(plain.size());
  for (std::size_t i = 0; i < plain.size(); ++i)
    out[i] = (plain[i] + key[i]) % kAlphabetSize;
  return out;
}

std::vector<int> vernam_decrypt(const std::vector<int>& cipher,
                                const std::vector<int>& key) {
  check_pad(cipher, key);
  std::vector<int> out(cipher.size());
  for (std::size_t i = 0; i < cipher.size(); ++i)
    out[i] = (cipher[i] - key[i] + kAlphabetSize) % kAlphabetSize;
  return out;
}

RsaKeyPair rsa_keygen(Natural p, Natural q, Natural e) {
  if (!nt::is_prime(p) || !nt::is_prime(q))
    throw std::domain_error("p and q must be prime");
  if (p == q) throw std::domain_error("primes must be distinct");
  const Natural phi = (p - 1) * (q - 1);
  if (nt::gcd(e % phi, phi) != 1)
    throw std::domain_error("e must be coprime to (p-1)(q-1)");
  return {p, q, p * q, e, nt::mod_inverse(e, phi)};
}

int block_codes(Natural n) {
  if (n < 30) throw std::domain_error("modulus too small for text blocks");
  int k = 1;
  Natural bound = 30;  // max block value + 1 for k codes is 30 * 10^{2k-2}
  while (bound <= n / 100) {
    bound *= 100;
    ++k;
  }
  return k;
}

Natural rsa_encrypt_block(Natural e, Natural n, Natural P) {
  if (P >= n) throw std::domain_error("block must be below the modulus");
  return nt::mod_pow(P, e, n);
}

Natural rsa_decrypt_block(Natural d, Natural n, Natural C) {
  if (C >= n) throw std::domain_error("block must be below the modulus");
  return nt::mod_pow(C, d, n);
}

std::vector<Natural> rsa_encrypt(Natural e, Natural n,
                                 const std::string& text) {
  const int k = block_codes(n);
  std::vector<int> codes = encode_text(text);
  while (codes.size() % k != 0) codes.push_back(26);  // pad with spaces
  std::vector<Natural> out;
  for (std::size_t i = 0; i < codes.size(); i += k) {
    Natural block = 0;
    for (int j = 0; j < k; ++j) block = block * 100 + Natural(codes[i + j]);
    out.push_back(rsa_encrypt_block(e, n, block));
  }
  return out;
}

std::string rsa_decrypt(Natural d, Natural n,
                        const std::vector<Natural>& blocks) {
  const int k = block_codes(n);
  std::vector<int> codes;
  for (Natural c : blocks) {
    Natural block = rsa_decrypt_block(d, n, c);
    std::vector<int> digits(k);
    for (int j = k - 1; j >= 0; --j) {
      digits[j] = int(block % 100);
      block /= 100;
    }
    codes.insert(codes.end(), digits.begin(), digits.end());
  }
  while (!codes.empty() && codes.back() == 26) codes.pop_back();
  return decode_text(codes);
}

std::string render_blocks(const std::vector<Natural>& blocks, int k) {
  std::ostringstream out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out << ' ';
    std::string s = std::to_string(blocks[i]);
    out << std::string(std::size_t(2 * k) - std::min<std::size_t>(s.size(), 2 * k),
                       '0')
        << s;
  }
  return out.str();
}

BreakResult break_rsa(Natural e, Natural n, FactorBackend backend,
                      std::uint64_t rng_seed) {
  if (n < 4 || nt::is_prime(n))
    throw std::domain_error("modulus is not composite");

  Natural p = 0;
  if (backend == FactorBackend::QuantumSim) {
    int m = 1;
    while ((Natural{1} << m) < n) ++m;
    if (3 * m + 1 > kMaxQubits)
      throw std::domain_error(
          "modulus exceeds the simulator's qubit cap; use the classical backend");
    const FactorResult fr = shor_factor(n, rng_seed);
    if (!fr.succeeded)
      throw std::runtime_error("order-finding attempts exhausted");
    p = fr.factor;
  } else {
    for (Natural d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        p = d;
        break;
      }
  }

  const Natural q = n / p;
  if (p == q || !nt::is_prime(p) || !nt::is_prime(q))
    throw std::domain_error("modulus is not a product of two distinct primes");
  const RsaKeyPair key = rsa_keygen(std::min(p, q), std::max(p, q), e);

  for (Natural probe : {Natural{1}, Natural{2}, n - 2}) {
    if (rsa_decrypt_block(key.d, n, rsa_encrypt_block(e, n, probe)) != probe)
      throw std::runtime_error("recovered key failed the probe round trip");
  }
  return {key.p, key.q, key.d};
}

}  // namespace qsim::crypto
