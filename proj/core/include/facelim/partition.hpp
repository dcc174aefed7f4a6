#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "facelim/natural.hpp"

namespace facelim {

struct PrimePower {
    Natural base;
    unsigned exponent = 1;

    Natural value() const;  // base^exponent
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Two disjoint multiplicand sets. An empty side stands for the multiplicand 1.
// Strict partitions carry prime bases only; generalized ones (catalog forms
// built on composite multiplicands such as 2^n - 1) relax that single rule
// but keep disjointness, so the coprimality guarantee is not asserted for them.
class Partition {
public:
    static Partition make(std::vector<PrimePower> side_a, std::vector<PrimePower> side_b,
                          std::string label = {});
    static Partition make_generalized(std::vector<PrimePower> side_a,
                                      std::vector<PrimePower> side_b, std::string label = {});

    const std::vector<PrimePower>& side_a() const { return a_; }
    const std::vector<PrimePower>& side_b() const { return b_; }
    const std::string& label() const { return label_; }
    bool generalized() const { return generalized_; }

    Natural product_a() const;  // 1 when side A is empty
    Natural product_b() const;

    // Largest base across both sides (symbol P). Throws on the all-empty partition.
    Natural max_base() const;

    // True when the combined bases are exactly all primes up to max_base(),
    // the regime where the square-root primality guarantee is sound.
    bool is_complete_prefix() const;

    // Canonical text form, e.g. "A=2^2*3^2;B=1". Bases ascending, exponent
    // omitted when 1, an empty side prints as 1.
    std::string format() const;
    static Partition parse(std::string_view text, bool strict = true);

private:
    Partition() = default;
    std::vector<PrimePower> a_;
    std::vector<PrimePower> b_;
    std::string label_;
    bool generalized_ = false;
};

}  // namespace facelim
