#include "facelim/primality.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "facelim/error.hpp"

namespace facelim {

namespace {

constexpr std::uint64_t kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17,
                                          19, 23, 29, 31, 37, 41};

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fold_u128(uint128 n) {
    return static_cast<std::uint64_t>(n) ^
           (static_cast<std::uint64_t>(n >> 64) * 0xff51afd7ed558ccdULL);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t folded) {
    std::uint64_t s = seed ^ folded;
    (void)splitmix64(s);
    return s;
}

// 128x128 -> 256 via 64-bit halves.
void mul_256(uint128 a, uint128 b, uint128& hi, uint128& lo) {
    const std::uint64_t a0 = static_cast<std::uint64_t>(a);
    const std::uint64_t a1 = static_cast<std::uint64_t>(a >> 64);
    const std::uint64_t b0 = static_cast<std::uint64_t>(b);
    const std::uint64_t b1 = static_cast<std::uint64_t>(b >> 64);
    const uint128 p00 = static_cast<uint128>(a0) * b0;
    const uint128 p01 = static_cast<uint128>(a0) * b1;
    const uint128 p10 = static_cast<uint128>(a1) * b0;
    const uint128 p11 = static_cast<uint128>(a1) * b1;
    uint128 mid = p01 + p10;
    uint128 mid_carry = (mid < p01) ? (static_cast<uint128>(1) << 64) : 0;
    lo = p00 + (mid << 64);
    uint128 lo_carry = (lo < p00) ? 1 : 0;
    hi = p11 + (mid >> 64) + mid_carry + lo_carry;
}

// Montgomery context for odd n < 2^126, R = 2^128.
struct Mont {
    uint128 n;
    uint128 neg_inv;  // -n^-1 mod 2^128
    uint128 one;      // 2^128 mod n

    explicit Mont(uint128 modulus) : n(modulus) {
        // Newton: inv of n mod 2^128. Start exact mod 8 (n odd), double
        // precision six times: 3 -> 6 -> ... -> 192 bits.
        uint128 inv = n;
        for (int i = 0; i < 6; ++i) inv *= 2 - n * inv;
        neg_inv = static_cast<uint128>(0) - inv;
        // 2^128 mod n by shift-and-reduce from 2^127 mod n.
        uint128 r = (static_cast<uint128>(1) << 127) % n;
        r <<= 1;  // < 2^128, no overflow since r < n < 2^126 gives r<<1 < 2^127
        if (r >= n) r -= n;
        one = r;
    }

    uint128 mul(uint128 a, uint128 b) const {
        uint128 t_hi, t_lo, mn_hi, mn_lo;
        mul_256(a, b, t_hi, t_lo);
        const uint128 m = t_lo * neg_inv;
        mul_256(m, n, mn_hi, mn_lo);
        // Low 128 bits of t + m*n vanish; the carry out is 1 unless both lows are 0.
        const uint128 carry = (t_lo + mn_lo < t_lo) ? 1 : 0;
        uint128 r = t_hi + mn_hi + carry;
        if (r >= n) r -= n;
        return r;
    }

    uint128 to_mont(uint128 a) const {
        // a * 2^128 mod n by 128 modular doublings. r stays < n < 2^126 so
        // the shift cannot overflow.
        uint128 r = a % n;
        for (int i = 0; i < 128; ++i) {
            r <<= 1;
            if (r >= n) r -= n;
        }
        return r;
    }

    uint128 pow(uint128 base_m, uint128 e) const {
        uint128 acc = one;
        uint128 sq = base_m;
        while (e != 0) {
            if (static_cast<std::uint64_t>(e) & 1u) acc = mul(acc, sq);
            sq = mul(sq, sq);
            e >>= 1;
        }
        return acc;
    }
};

PrimalityVerdict mr_u128(uint128 n, int rounds, std::uint64_t seed) {
    // Callers have already handled n < 2 and even n and small-prime hits.
    const Mont mont(n);
    uint128 d = n - 1;
    int s = 0;
    while ((static_cast<std::uint64_t>(d) & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    const uint128 minus_one_m = mont.to_mont(n - 1);

    auto round_ok = [&](uint128 witness) {
        const uint128 a = witness % n;
        if (a <= 1 || a == n - 1) return true;
        uint128 x = mont.pow(mont.to_mont(a), d);
        if (x == mont.one || x == minus_one_m) return true;
        for (int i = 1; i < s; ++i) {
            x = mont.mul(x, x);
            if (x == minus_one_m) return true;
        }
        return false;
    };

    if (n < deterministic_witness_bound()) {
        for (std::uint64_t p : kSmallPrimes) {
            if (!round_ok(p)) return {VerdictKind::Composite, 0};
        }
        return {VerdictKind::ProvenPrime, 0};
    }
    if (rounds < 1) throw DomainError("randomized primality path requires rounds >= 1");
    std::uint64_t state = mix_seed(seed, fold_u128(n));
    for (int i = 0; i < rounds; ++i) {
        const uint128 hi = splitmix64(state);
        const uint128 lo = splitmix64(state);
        const uint128 witness = 2 + ((hi << 64) | lo) % (n - 3);
        if (!round_ok(witness)) return {VerdictKind::Composite, i + 1};
    }
    return {VerdictKind::ProbablePrime, rounds};
}

// n < 2^64: the seven-witness set is a proof for the full range.
constexpr std::uint64_t kWitnesses64[] = {2,      325,     9375,      28178,
                                          450775, 9780504, 1795265022};

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % n);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t e, std::uint64_t n) {
    std::uint64_t acc = 1 % n;
    std::uint64_t sq = base % n;
    while (e != 0) {
        if (e & 1u) acc = mulmod64(acc, sq, n);
        sq = mulmod64(sq, sq, n);
        e >>= 1;
    }
    return acc;
}

PrimalityVerdict mr_u64(std::uint64_t n) {
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t w : kWitnesses64) {
        const std::uint64_t a = w % n;
        if (a <= 1 || a == n - 1) continue;
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool passed = false;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                passed = true;
                break;
            }
        }
        if (!passed) return {VerdictKind::Composite, 0};
    }
    return {VerdictKind::ProvenPrime, 0};
}

// Arbitrary-size randomized Miller-Rabin over cpp_int, for n >= 2^126.
PrimalityVerdict mr_natural(const Natural& n, int rounds, std::uint64_t seed) {
    if (rounds < 1) throw DomainError("randomized primality path requires rounds >= 1");
    Natural d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Fold the candidate into the witness stream so verdicts are independent
    // of evaluation order.
    std::uint64_t folded = 0;
    for (Natural v = n; v != 0; v >>= 64) {
        folded = folded * 0xff51afd7ed558ccdULL + static_cast<std::uint64_t>(v & 0xffffffffffffffffULL);
    }
    std::uint64_t state = mix_seed(seed, folded);

    const unsigned bits = bit_length(n);
    const Natural span = n - 3;
    for (int i = 0; i < rounds; ++i) {
        Natural w = 0;
        for (unsigned got = 0; got < bits + 64; got += 64) {
            w = (w << 64) | splitmix64(state);
        }
        const Natural a = 2 + w % span;
        Natural x = boost::multiprecision::powm(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool passed = false;
        for (int r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) {
                passed = true;
                break;
            }
        }
        if (!passed) return {VerdictKind::Composite, i + 1};
    }
    return {VerdictKind::ProbablePrime, rounds};
}

}  // namespace

const char* to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Composite: return "composite";
        case VerdictKind::ProbablePrime: return "probable-prime";
        case VerdictKind::ProvenPrime: return "prime";
    }
    return "unknown";
}

uint128 deterministic_witness_bound() {
    // First-13-primes witness set certifies everything below this value.
    static const uint128 bound = u128_from_natural(Natural("3317044064679887385961981"));
    return bound;
}

PrimalityVerdict is_prime_u128(uint128 n, int rounds, std::uint64_t seed) {
    if (n >> 126 != 0) return is_prime(natural_from_u128(n), rounds, seed);
    if (n < 2) return {VerdictKind::Composite, 0};
    for (std::uint64_t p : kSmallPrimes) {
        if (n == p) return {VerdictKind::ProvenPrime, 0};
        if (n % p == 0) return {VerdictKind::Composite, 0};
    }
    if (n >> 64 == 0) return mr_u64(static_cast<std::uint64_t>(n));
    return mr_u128(n, rounds, seed);
}

PrimalityVerdict is_prime(const Natural& n, int rounds, std::uint64_t seed) {
    if (n < 2) return {VerdictKind::Composite, 0};
    if (bit_length(n) <= 126) return is_prime_u128(u128_from_natural(n), rounds, seed);
    for (std::uint64_t p : kSmallPrimes) {
        if (n % p == 0) return {VerdictKind::Composite, 0};
    }
    return mr_natural(n, rounds, seed);
}

PrimalityVerdict trial_division_oracle(const Natural& n) {
    if (n > kTrialDivisionBound) {
        throw CapacityError("trial division oracle bound is 10^12, got " + to_decimal(n));
    }
    const std::uint64_t v = static_cast<std::uint64_t>(n);
    if (v < 2) return {VerdictKind::Composite, 0};
    if (v == 2 || v == 3) return {VerdictKind::ProvenPrime, 0};
    if (v % 2 == 0 || v % 3 == 0) return {VerdictKind::Composite, 0};
    for (std::uint64_t f = 5; f * f <= v; f += 6) {
        if (v % f == 0 || v % (f + 2) == 0) return {VerdictKind::Composite, 0};
    }
    return {VerdictKind::ProvenPrime, 0};
}

}  // namespace facelim
