#include "facelim/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <string>

#include "facelim/error.hpp"

namespace facelim {

namespace {

std::uint64_t initial_ceiling() {
    if (const char* env = std::getenv("FACELIM_SIEVE_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 16) return static_cast<std::uint64_t>(v);
    }
    return kDefaultSieveCeiling;
}

struct SharedTable {
    std::mutex mu;
    std::shared_ptr<const std::vector<std::uint64_t>> primes =
        std::make_shared<const std::vector<std::uint64_t>>();
    std::uint64_t sieved_to = 0;  // primes covers [2, sieved_to]
    std::atomic<std::uint64_t> ceiling{initial_ceiling()};
};

SharedTable& table() {
    static SharedTable t;
    return t;
}

// Plain Eratosthenes over [2, limit]. Memory: limit/8 bytes of flags plus the
// output vector; fine up to ~1e8 (the largest demand in this codebase is 1e8
// for the extended experiment tier).
std::vector<std::uint64_t> eratosthenes(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> out;
    if (limit >= 2) {
        // pi(x) ~ x/ln x; reserve with a little slack to avoid regrowth.
        double est = static_cast<double>(limit) / std::log(static_cast<double>(std::max<std::uint64_t>(limit, 3)));
        out.reserve(static_cast<std::size_t>(est * 1.15) + 16);
    }
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        if (p <= limit / p) {
            for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
        }
    }
    return out;
}

}  // namespace

std::uint64_t sieve_ceiling() { return table().ceiling.load(); }

void set_sieve_ceiling(std::uint64_t ceiling) {
    SharedTable& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    if (ceiling < t.sieved_to) {
        throw CapacityError("sieve ceiling " + std::to_string(ceiling) +
                            " below already-sieved bound " + std::to_string(t.sieved_to));
    }
    t.ceiling.store(ceiling);
}

namespace detail {

PrimeSnapshot primes_covering(std::uint64_t limit) {
    SharedTable& t = table();
    if (limit > t.ceiling.load()) {
        throw CapacityError("sieve request " + std::to_string(limit) + " exceeds ceiling " +
                            std::to_string(t.ceiling.load()) +
                            " (raise FACELIM_SIEVE_LIMIT to allow)");
    }
    std::lock_guard<std::mutex> lock(t.mu);
    if (limit > t.sieved_to) {
        // Grow geometrically so repeated slightly-larger requests stay O(n log log n) total.
        std::uint64_t target = std::max<std::uint64_t>(limit, std::max<std::uint64_t>(t.sieved_to * 2, 1024));
        target = std::min(target, t.ceiling.load());
        t.primes = std::make_shared<const std::vector<std::uint64_t>>(eratosthenes(target));
        t.sieved_to = target;
    }
    return PrimeSnapshot{t.primes, t.sieved_to};
}

}  // namespace detail

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    if (limit < 2) return {};
    detail::PrimeSnapshot snap = detail::primes_covering(limit);
    auto end = std::upper_bound(snap.primes->begin(), snap.primes->end(), limit);
    return std::vector<std::uint64_t>(snap.primes->begin(), end);
}

std::vector<std::uint64_t> first_n_primes(std::size_t n) {
    if (n == 0) return {};
    // p_n < n(ln n + ln ln n) for n >= 6; pad smaller n with a constant.
    double nd = static_cast<double>(n);
    std::uint64_t bound = 16;
    if (n >= 6) {
        bound = static_cast<std::uint64_t>(nd * (std::log(nd) + std::log(std::log(nd)))) + 2;
    }
    detail::PrimeSnapshot snap = detail::primes_covering(bound);
    while (snap.primes->size() < n) {
        // Bound estimate fell short (tiny n) or table was capped; try the
        // ceiling-checked path once more with a doubled request.
        bound *= 2;
        snap = detail::primes_covering(bound);
        if (snap.sieved_to >= sieve_ceiling() && snap.primes->size() < n) {
            throw CapacityError("first_n_primes(" + std::to_string(n) +
                                ") exceeds sieve ceiling " + std::to_string(sieve_ceiling()));
        }
    }
    return std::vector<std::uint64_t>(snap.primes->begin(), snap.primes->begin() + static_cast<std::ptrdiff_t>(n));
}

std::uint64_t prime_pi_exact_u64(std::uint64_t x) {
    if (x < 2) return 0;
    detail::PrimeSnapshot snap = detail::primes_covering(x);
    auto end = std::upper_bound(snap.primes->begin(), snap.primes->end(), x);
    return static_cast<std::uint64_t>(end - snap.primes->begin());
}

std::uint64_t prime_pi_exact(double x) {
    if (!(x >= 2.0)) return 0;  // NaN and anything below 2 count no primes
    double fl = std::floor(x);
    if (fl > 18446744073709549568.0) {
        throw CapacityError("prime_pi_exact argument too large for 64-bit floor");
    }
    return prime_pi_exact_u64(static_cast<std::uint64_t>(fl));
}

double prime_pi_pnt(double x) {
    if (!(x > 1.0)) {
        throw DomainError("x/ln(x) undefined for x <= 1");
    }
    return x / std::log(x);
}

}  // namespace facelim
