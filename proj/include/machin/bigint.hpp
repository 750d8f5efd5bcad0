#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace machin {

using BigInt = mpz_class;
using u128 = unsigned __int128;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Number of bits in |n|; 0 for n = 0.
inline std::size_t bit_length(const BigInt& n) {
    if (n == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline int bit_length_u128(u128 v) {
    int bits = 0;
    while (v) { ++bits; v >>= 1; }
    return bits;
}

std::string to_string_u128(u128 v);

inline BigInt to_bigint(u128 v) {
    BigInt hi(static_cast<unsigned long>(v >> 64));
    hi <<= 64;
    return hi + BigInt(static_cast<unsigned long>(v & ~0ULL));
}

// Exact floor square root, pure integer Newton with final correction.
u128 isqrt_u128(u128 d);

// Deterministic Miller-Rabin, valid for the full uint64_t range.
bool is_prime_u64(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

}  // namespace machin
