#include "facelim/probability.hpp"

#include <algorithm>

#include "facelim/error.hpp"
#include "facelim/primality.hpp"
#include "facelim/sieve.hpp"

namespace facelim {

ProbabilityEstimate probability_estimate(const FEResult& result, Sign which,
                                         const std::vector<Natural>& excluded) {
    const Natural& c = result.c(which);
    if (c < 2) {
        throw DomainError("degenerate resultant: C = isqrt(" + to_decimal(result.r(which)) +
                          ") < 2, pi(C) = 0");
    }
    if (bit_length(c) > 63 || bit_length(result.p_max) > 63) {
        throw CapacityError("prime counting range too large for the exact sieve");
    }
    const std::uint64_t c64 = static_cast<std::uint64_t>(c);
    const std::uint64_t p64 = static_cast<std::uint64_t>(result.p_max);

    ProbabilityEstimate est;
    est.pi_c = prime_pi_exact_u64(c64);
    est.pi_p = prime_pi_exact_u64(p64);
    est.n_exact = est.pi_c > est.pi_p ? est.pi_c - est.pi_p : 0;
    est.n_approx = prime_pi_pnt(static_cast<double>(c64)) - prime_pi_pnt(static_cast<double>(p64));
    est.p_prime = static_cast<double>(est.pi_p) / static_cast<double>(est.pi_c);
    est.p_divisible = 1.0 - est.p_prime;

    std::vector<Natural> t(excluded);
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    for (const Natural& q : t) {
        if (is_prime(q).kind == VerdictKind::Composite) {
            throw DomainError("excluded set must contain primes, got " + to_decimal(q));
        }
    }
    est.residual_count = t.size();
    est.p_prime_residual =
        (static_cast<double>(est.pi_p) - static_cast<double>(est.residual_count)) /
        static_cast<double>(est.pi_c);
    est.guaranteed = result.guaranteed(which);
    return est;
}

}  // namespace facelim
