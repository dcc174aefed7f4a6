#pragma once

#include <cstdint>
#include <vector>

#include "facelim/fe.hpp"
#include "facelim/natural.hpp"

namespace facelim {

// Estimates for one resultant. pi_p and pi_c are kept as exact counts so
// callers can form the rationals pi_p/pi_c before any float formatting.
struct ProbabilityEstimate {
    std::uint64_t pi_p = 0;          // pi(P)
    std::uint64_t pi_c = 0;          // pi(C)
    std::uint64_t n_exact = 0;       // N  = pi(C) - pi(P), clamped at 0
    double n_approx = 0.0;           // PNT estimate of N: C/ln C - P/ln P
    double p_divisible = 0.0;        // P(X)   = 1 - pi(P)/pi(C)
    double p_prime = 0.0;            // 1-P(X) = pi(P)/pi(C)
    std::uint64_t residual_count = 0;  // R(P) = |excluded|
    double p_prime_residual = 0.0;   // (pi(P) - R(P)) / pi(C)
    bool guaranteed = false;         // square-root regime: estimate is moot
};

// Divisor-counting heuristic for the chosen resultant; `excluded` is the
// caller-supplied set T of primes ruled out by other means (deduplicated,
// each member must be prime). Throws DomainError when C < 2 (pi(C) = 0).
ProbabilityEstimate probability_estimate(const FEResult& result, Sign which,
                                         const std::vector<Natural>& excluded = {});

}  // namespace facelim
