#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "facelim/natural.hpp"

namespace facelim {

// Default ceiling for the shared prime table. Overridable once at startup via
// set_sieve_ceiling() or the FACELIM_SIEVE_LIMIT environment variable.
inline constexpr std::uint64_t kDefaultSieveCeiling = 100'000'000;

// Ceiling currently in effect.
std::uint64_t sieve_ceiling();

// Raises (or lowers) the ceiling. Must be called before the table has grown
// past the new value; lowering below already-sieved territory throws.
void set_sieve_ceiling(std::uint64_t ceiling);

// All primes <= limit, ascending. Throws CapacityError above the ceiling.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

// The first n primes, ascending. Grows the shared table on demand;
// throws CapacityError if n-th prime would exceed the ceiling.
std::vector<std::uint64_t> first_n_primes(std::size_t n);

// pi(x): number of primes <= floor(x). Exact, via the shared table.
// Throws CapacityError when floor(x) exceeds the ceiling.
std::uint64_t prime_pi_exact(double x);
std::uint64_t prime_pi_exact_u64(std::uint64_t x);

// Prime number theorem estimate x / ln(x). Throws DomainError for x <= 1.
double prime_pi_pnt(double x);

namespace detail {
// Immutable snapshot of the shared prime table covering at least [2, limit].
// The snapshot stays valid (shared ownership) even if the table grows later.
struct PrimeSnapshot {
    std::shared_ptr<const std::vector<std::uint64_t>> primes;
    std::uint64_t sieved_to = 0;
};
PrimeSnapshot primes_covering(std::uint64_t limit);
}  // namespace detail

}  // namespace facelim
