#pragma once

#include <cstdint>

#include "facelim/natural.hpp"

namespace facelim {

enum class VerdictKind { Composite, ProbablePrime, ProvenPrime };

// witness_rounds is the number of randomized Miller-Rabin rounds consumed;
// 0 on every deterministic path (fixed witness sets, trial division).
struct PrimalityVerdict {
    VerdictKind kind = VerdictKind::Composite;
    int witness_rounds = 0;
};

const char* to_string(VerdictKind kind);

// Seed for randomized witness selection. Witnesses for a candidate n are
// derived from mix(seed, n), never from call order, so any enumeration
// schedule produces identical verdicts.
inline constexpr std::uint64_t kDefaultPrimalitySeed = 0x9e3779b97f4a7c15ULL;

// Largest n certified by the fixed 13-prime witness set (about 3.3e24).
// Below it the verdict is ProvenPrime; above, randomized rounds apply.
uint128 deterministic_witness_bound();

// Miller-Rabin with deterministic witness sets below
// deterministic_witness_bound() and seeded randomized rounds above it.
// 0 and 1 are Composite by convention. Composite is never returned for a
// true prime; ProbablePrime errs with probability <= 4^-rounds.
PrimalityVerdict is_prime(const Natural& n, int rounds = 40,
                          std::uint64_t seed = kDefaultPrimalitySeed);

// Same contract on the 128-bit fast path (Montgomery arithmetic, valid for
// any n < 2^126; larger values are routed through the Natural overload).
PrimalityVerdict is_prime_u128(uint128 n, int rounds = 40,
                               std::uint64_t seed = kDefaultPrimalitySeed);

// Exact verdict by dividing by every candidate factor <= sqrt(n).
// Independent of the Miller-Rabin code on purpose: tests use it as an
// oracle. Bound 10^12; larger n throws CapacityError.
inline constexpr std::uint64_t kTrialDivisionBound = 1'000'000'000'000ULL;
PrimalityVerdict trial_division_oracle(const Natural& n);

}  // namespace facelim
