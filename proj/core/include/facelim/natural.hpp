#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cstdint>
#include <string>
#include <string_view>

#include "facelim/error.hpp"

namespace facelim {

// Unbounded nonnegative integer. Every public operation in this library keeps
// its Naturals >= 0; subtraction-like results go through absolute values.
using Natural = boost::multiprecision::cpp_int;

using uint128 = unsigned __int128;

// Number of bits in n: bit_length(0) == 0, bit_length(1) == 1, bit_length(8) == 4.
inline unsigned bit_length(const Natural& n) {
    assert(n >= 0);
    if (n == 0) return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
}

inline unsigned bit_length_u128(uint128 n) {
    const auto hi = static_cast<std::uint64_t>(n >> 64);
    const auto lo = static_cast<std::uint64_t>(n);
    if (hi != 0) return 128 - static_cast<unsigned>(__builtin_clzll(hi));
    if (lo != 0) return 64 - static_cast<unsigned>(__builtin_clzll(lo));
    return 0;
}

inline Natural natural_from_u128(uint128 v) {
    Natural n = static_cast<std::uint64_t>(v >> 64);
    n <<= 64;
    n |= static_cast<std::uint64_t>(v);
    return n;
}

// Precondition: n < 2^128.
inline uint128 u128_from_natural(const Natural& n) {
    assert(n >= 0 && bit_length(n) <= 128);
    const auto hi = static_cast<std::uint64_t>(Natural(n >> 64));
    const auto lo = static_cast<std::uint64_t>(Natural(n & 0xffffffffffffffffULL));
    return (static_cast<uint128>(hi) << 64) | lo;
}

inline std::string to_decimal(const Natural& n) { return n.str(); }

// Parses a nonnegative decimal string; the round trip through to_decimal is lossless.
inline Natural natural_from_decimal(std::string_view text) {
    if (text.empty()) throw DomainError("empty decimal string");
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw DomainError("invalid decimal digit in \"" + std::string(text) + "\"");
        }
    }
    return Natural(std::string(text));
}

// Largest s with s*s <= n, by Newton iteration on the bit-length seed.
// The bracket s^2 <= n < (s+1)^2 is asserted in debug builds.
inline Natural isqrt(const Natural& n) {
    assert(n >= 0);
    if (n < 2) return n;
    // Seed above the true root: 2^ceil(bits/2) >= sqrt(n).
    Natural x = Natural(1) << ((bit_length(n) + 1) / 2);
    Natural y = (x + n / x) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    assert(x * x <= n && (x + 1) * (x + 1) > n);
    return x;
}

inline Natural pow_natural(const Natural& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

}  // namespace facelim
