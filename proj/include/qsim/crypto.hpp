#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsim/numtheory.hpp"

// Pedagogical cryptography only: tiny keys, deterministic seeds, no secure
// randomness. Do not use for anything real.
namespace qsim::crypto {

using nt::Natural;

inline constexpr int kAlphabetSize = 30;

/// A..Z -> 00..25, space -> 26, '?' -> 27, ',' -> 28, '.' -> 29.
int encode_symbol(char c);
char decode_symbol(int code);
std::vector<int> encode_text(const std::string& s);
std::string decode_text(const std::vector<int>& codes);

/// One-time pad, addition modulo 30. The key must match the message length.
std::vector<int> vernam_encrypt(const std::vector<int>& plain,
                                const std::vector<int>& key);
std::vector<int> vernam_decrypt(const std::vector<int>& cipher,
                                const std::vector<int>& key);

struct RsaKeyPair {
  Natural p, q, n, e, d;
  Natural phi() const { return (p - 1) * (q - 1); }
};

RsaKeyPair rsa_keygen(Natural p, Natural q, Natural e);

/// Codes per plaintext block: the largest k with every k-code value
/// (at most 30 * 10^{2k-2} - 1) below n. Requires n >= 30.
int block_codes(Natural n);

Natural rsa_encrypt_block(Natural e, Natural n, Natural P);
Natural rsa_decrypt_block(Natural d, Natural n, Natural C);

/// Text is encoded to two-digit codes, right-padded with spaces to a whole
/// number of blocks, grouped, and each block exponentiated mod n.
std::vector<Natural> rsa_encrypt(Natural e, Natural n, const std::string& text);
/// Inverse of rsa_encrypt; trailing padding spaces are stripped.
std::string rsa_decrypt(Natural d, Natural n,
                        const std::vector<Natural>& blocks);

/// Blocks as fixed-width decimal strings (2k digits, leading zeros kept),
/// space separated.
std::string render_blocks(const std::vector<Natural>& blocks, int k);

enum class FactorBackend { QuantumSim, Classical };

struct BreakResult {
  Natural p, q, d;
};

/// Recovers the private exponent from the public key by factoring n, then
/// verifies the recovered key on probe blocks.
BreakResult break_rsa(Natural e, Natural n, FactorBackend backend,
                      std::uint64_t rng_seed = 0);

}  // namespace qsim::crypto
