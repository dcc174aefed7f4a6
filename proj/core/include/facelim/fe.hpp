#pragma once

#include <utility>

#include "facelim/natural.hpp"
#include "facelim/partition.hpp"

namespace facelim {

enum class Sign { Plus, Minus };

// Both resultants of one partition: r_plus = product_a + product_b,
// r_minus = |product_a - product_b|. p_max is the largest base (symbol P),
// c_* = isqrt(r_*) (symbol C). guaranteed_* is the square-root condition
// under a complete prime prefix; when it is true the resultant is provably
// prime (every prime <= sqrt(r) is <= p_max, sits in the partition, and
// divides neither product exactly, hence not their sum or difference).
struct FEResult {
    Natural product_a;
    Natural product_b;
    Natural r_plus;
    Natural r_minus;
    Natural p_max;
    Natural c_plus;
    Natural c_minus;
    bool complete_prefix = false;
    bool guaranteed_plus = false;
    bool guaranteed_minus = false;

    const Natural& r(Sign which) const { return which == Sign::Plus ? r_plus : r_minus; }
    const Natural& c(Sign which) const { return which == Sign::Plus ? c_plus : c_minus; }
    bool guaranteed(Sign which) const {
        return which == Sign::Plus ? guaranteed_plus : guaranteed_minus;
    }
};

// Core evaluation. Throws InvalidPartitionError when both sides are empty
// (partition construction already rejects overlapping bases).
FEResult evaluate(const Partition& partition);

// True iff gcd(r, base) = 1 for every base of the partition. Holds for both
// resultants of every valid strict partition.
bool coprime_check(const Partition& partition, const Natural& r);

// The square-root guarantee with the completeness precondition made
// explicit: (complete_prefix AND c <= p_max AND r > 1). The flag matters:
// A={2,7} gives r_plus = 15 with isqrt(15) = 3 <= 7, yet 15 = 3*5.
bool is_guaranteed_prime(const FEResult& result, Sign which, bool complete_prefix);

// Last-digit rule: reject (true) when the combined last digits make the
// resultant divisible by 5, keeping the single prime resultant 5 itself.
bool mod5_last_digit_filter(const Natural& product_a, const Natural& product_b, Sign sign);

// Twin candidate pair (product - 1, product + 1) over a core multiplicand set.
std::pair<Natural, Natural> twin_candidates(const std::vector<PrimePower>& core);

}  // namespace facelim
