#include "facelim/fe.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "facelim/error.hpp"

namespace facelim {

FEResult evaluate(const Partition& partition) {
    if (partition.side_a().empty() && partition.side_b().empty()) {
        throw InvalidPartitionError("cannot evaluate: both sides empty");
    }
    FEResult res;
    res.product_a = partition.product_a();
    res.product_b = partition.product_b();
    res.r_plus = res.product_a + res.product_b;
    res.r_minus = res.product_a >= res.product_b ? res.product_a - res.product_b
                                                 : res.product_b - res.product_a;
    res.p_max = partition.max_base();
    res.c_plus = isqrt(res.r_plus);
    res.c_minus = isqrt(res.r_minus);
    res.complete_prefix = !partition.generalized() && partition.is_complete_prefix();
    res.guaranteed_plus = res.complete_prefix && res.c_plus <= res.p_max && res.r_plus > 1;
    res.guaranteed_minus = res.complete_prefix && res.c_minus <= res.p_max && res.r_minus > 1;
    return res;
}

bool coprime_check(const Partition& partition, const Natural& r) {
    for (const std::vector<PrimePower>* side : {&partition.side_a(), &partition.side_b()}) {
        for (const PrimePower& pp : *side) {
            if (boost::multiprecision::gcd(r, pp.base) != 1) return false;
        }
    }
    return true;
}

bool is_guaranteed_prime(const FEResult& result, Sign which, bool complete_prefix) {
    return complete_prefix && result.c(which) <= result.p_max && result.r(which) > 1;
}

bool mod5_last_digit_filter(const Natural& product_a, const Natural& product_b, Sign sign) {
    const int da = static_cast<int>(Natural(product_a % 10));
    const int db = static_cast<int>(Natural(product_b % 10));
    const int combined = sign == Sign::Plus ? (da + db) % 10 : ((da - db) % 10 + 10) % 10;
    if (combined != 0 && combined != 5) return false;
    const Natural r = sign == Sign::Plus
                          ? Natural(product_a + product_b)
                          : (product_a >= product_b ? Natural(product_a - product_b)
                                                    : Natural(product_b - product_a));
    return r != 5;
}

std::pair<Natural, Natural> twin_candidates(const std::vector<PrimePower>& core) {
    if (core.empty()) throw InvalidPartitionError("twin candidates need a non-empty core");
    const FEResult res = evaluate(Partition::make(core, {}));
    return {res.r_minus, res.r_plus};
}

}  // namespace facelim
