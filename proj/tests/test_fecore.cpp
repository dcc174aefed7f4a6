#include <catch2/catch.hpp>

#include <cstdint>
#include <vector>

#include <facelim/error.hpp>
#include <facelim/fe.hpp>
#include <facelim/partition.hpp>
#include <facelim/probability.hpp>
#include <facelim/sieve.hpp>

using namespace facelim;

namespace {

Partition worked_example() {
    // A = 2^2 * 3^2, B = 1: R+ = 37, R- = 35.
    return Partition::make({{Natural(2), 2}, {Natural(3), 2}}, {});
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

TEST_CASE("partition construction validates") {
    // Shared base across sides breaks disjointness.
    CHECK_THROWS_AS(Partition::make({{Natural(2), 1}}, {{Natural(2), 3}}),
                    InvalidPartitionError);
    // Duplicate base within one side.
    CHECK_THROWS_AS(Partition::make({{Natural(3), 1}, {Natural(3), 2}}, {}),
                    InvalidPartitionError);
    // Strict partitions require prime bases.
    CHECK_THROWS_AS(Partition::make({{Natural(4), 1}}, {}), InvalidPartitionError);
    CHECK_THROWS_AS(Partition::make({{Natural(1), 1}}, {}), InvalidPartitionError);
    // Exponent zero is never a multiplicand.
    CHECK_THROWS_AS(Partition::make({{Natural(2), 0}}, {}), InvalidPartitionError);
    // Generalized partitions admit composite bases but still reject < 2
    // and overlap.
    const auto g = Partition::make_generalized({{Natural(4), 1}}, {{Natural(9), 1}});
    CHECK(g.generalized());
    CHECK_THROWS_AS(Partition::make_generalized({{Natural(1), 1}}, {}),
                    InvalidPartitionError);
    CHECK_THROWS_AS(Partition::make_generalized({{Natural(6), 1}}, {{Natural(6), 1}}),
                    InvalidPartitionError);
}

TEST_CASE("partition format and parse round-trip") {
    const auto p = worked_example();
    CHECK(p.format() == "A=2^2*3^2;B=1");
    const auto q = Partition::parse("A=2^2*3^2;B=1");
    CHECK(q.format() == p.format());
    CHECK(q.side_a().size() == 2);
    CHECK(q.side_b().empty());
    // Whitespace and exponent-1 shorthand are accepted.
    const auto r = Partition::parse(" A = 5 * 2 ; B = 3 ^ 2 ");
    CHECK(r.format() == "A=2*5;B=3^2");
    // Empty side round-trips through the literal 1.
    CHECK(Partition::parse("A=1;B=7").format() == "A=1;B=7");
    // Strict parse rejects composite bases; relaxed parse admits them.
    CHECK_THROWS_AS(Partition::parse("A=4;B=1"), InvalidPartitionError);
    const auto gen = Partition::parse("A=4;B=1", false);
    CHECK(gen.generalized());
    CHECK(gen.product_a() == 4);
    // Malformed text.
    CHECK_THROWS_AS(Partition::parse(""), InvalidPartitionError);
    CHECK_THROWS_AS(Partition::parse("A=2"), InvalidPartitionError);
    CHECK_THROWS_AS(Partition::parse("A=2;B=x"), InvalidPartitionError);
}

TEST_CASE("partition products and prefix detection") {
    const auto p = worked_example();
    CHECK(p.product_a() == 36);
    CHECK(p.product_b() == 1);
    CHECK(p.max_base() == 3);
    CHECK(p.is_complete_prefix());

    const auto gap = Partition::make({{Natural(2), 1}, {Natural(7), 1}}, {});
    CHECK_FALSE(gap.is_complete_prefix());

    const auto split = Partition::make({{Natural(2), 1}, {Natural(5), 1}}, {{Natural(3), 1}});
    CHECK(split.is_complete_prefix());
    CHECK(split.max_base() == 5);

    CHECK_THROWS_AS(Partition::make({}, {}).max_base(), InvalidPartitionError);
}

TEST_CASE("evaluate on the worked example") {
    const auto res = evaluate(worked_example());
    CHECK(res.product_a == 36);
    CHECK(res.product_b == 1);
    CHECK(res.r_plus == 37);
    CHECK(res.r_minus == 35);
    CHECK(res.p_max == 3);
    CHECK(res.c_plus == 6);
    CHECK(res.c_minus == 5);
    CHECK(res.complete_prefix);
    // 6 > 3 and 5 > 3: neither resultant is covered by the guarantee.
    CHECK_FALSE(res.guaranteed_plus);
    CHECK_FALSE(res.guaranteed_minus);
}

TEST_CASE("evaluate rejects the empty partition") {
    CHECK_THROWS_AS(evaluate(Partition::make({}, {})), InvalidPartitionError);
}

TEST_CASE("r_minus is the absolute difference") {
    const auto p = Partition::make({{Natural(2), 1}}, {{Natural(5), 1}});
    const auto res = evaluate(p);
    CHECK(res.r_plus == 7);
    CHECK(res.r_minus == 3);
}

TEST_CASE("square-root guarantee") {
    // A = 2*3, B = 5: R+ = 11, C = 3 <= 5, complete prefix.
    const auto res = evaluate(
        Partition::make({{Natural(2), 1}, {Natural(3), 1}}, {{Natural(5), 1}}));
    CHECK(res.r_plus == 11);
    CHECK(res.guaranteed_plus);
    CHECK(res.r_minus == 1);
    // R- = 1 is a unit, not a prime; the guarantee must exclude it.
    CHECK_FALSE(res.guaranteed_minus);

    // Smallest case: A = 2 alone.
    const auto two = evaluate(Partition::make({{Natural(2), 1}}, {}));
    CHECK(two.r_plus == 3);
    CHECK(two.guaranteed_plus);
    CHECK(two.r_minus == 1);
    CHECK_FALSE(two.guaranteed_minus);

    // The incomplete-prefix trap: A = {2,7} gives R+ = 15 = 3*5 with
    // isqrt(15) = 3 <= 7. Completeness is what keeps the theorem sound.
    const auto trap = evaluate(Partition::make({{Natural(2), 1}, {Natural(7), 1}}, {}));
    CHECK(trap.r_plus == 15);
    CHECK_FALSE(trap.complete_prefix);
    CHECK_FALSE(trap.guaranteed_plus);
    CHECK(is_guaranteed_prime(trap, Sign::Plus, trap.complete_prefix) == trap.guaranteed_plus);

    // is_guaranteed_prime mirrors the evaluate flags on every case above.
    for (const auto* r : {&res, &two, &trap}) {
        CHECK(is_guaranteed_prime(*r, Sign::Plus, r->complete_prefix) == r->guaranteed_plus);
        CHECK(is_guaranteed_prime(*r, Sign::Minus, r->complete_prefix) == r->guaranteed_minus);
    }
}

TEST_CASE("coprimality of resultants with every base") {
    // Exhaustive over partitions of the first 5 primes, sampled exponents.
    const auto primes = first_n_primes(5);
    std::uint64_t state = 42;
    for (unsigned mask = 0; mask < (1u << 5); ++mask) {
        std::vector<PrimePower> a;
        std::vector<PrimePower> b;
        for (unsigned i = 0; i < 5; ++i) {
            const unsigned exponent = 1 + unsigned(splitmix64(state) % 3);
            if (mask & (1u << i)) {
                a.push_back({Natural(primes[i]), exponent});
            } else {
                b.push_back({Natural(primes[i]), exponent});
            }
        }
        const auto p = Partition::make(std::move(a), std::move(b));
        const auto res = evaluate(p);
        CHECK(coprime_check(p, res.r_plus));
        CHECK(coprime_check(p, res.r_minus));
    }
    // A resultant sharing a base fails the check.
    const auto p = worked_example();
    CHECK_FALSE(coprime_check(p, Natural(6)));
}

TEST_CASE("mod-5 last digit filter") {
    // 36 - 1 = 35: last digits (6,1) under minus reject.
    CHECK(mod5_last_digit_filter(Natural(36), Natural(1), Sign::Minus));
    // 6 - 1 = 5 is the exempt prime itself.
    CHECK_FALSE(mod5_last_digit_filter(Natural(6), Natural(1), Sign::Minus));
    CHECK_FALSE(mod5_last_digit_filter(Natural(6), Natural(1), Sign::Plus));  // 7
    // |2 - 7| = 5 exempt from the other side.
    CHECK_FALSE(mod5_last_digit_filter(Natural(2), Natural(7), Sign::Minus));
    // 36 + 9 = 45 rejected.
    CHECK(mod5_last_digit_filter(Natural(36), Natural(9), Sign::Plus));
    // 4 + 1 = 5 exempt; 14 + 1 = 15 rejected.
    CHECK_FALSE(mod5_last_digit_filter(Natural(4), Natural(1), Sign::Plus));
    CHECK(mod5_last_digit_filter(Natural(14), Natural(1), Sign::Plus));

    // The filter agrees with divisibility by 5 (minus the R = 5 exemption)
    // across a dense grid.
    for (std::uint64_t a = 1; a <= 40; ++a) {
        for (std::uint64_t b = 1; b <= 40; ++b) {
            for (Sign s : {Sign::Plus, Sign::Minus}) {
                const std::uint64_t r = s == Sign::Plus ? a + b : (a > b ? a - b : b - a);
                const bool expect = r % 5 == 0 && r != 5;
                CHECK(mod5_last_digit_filter(Natural(a), Natural(b), s) == expect);
            }
        }
    }
}

TEST_CASE("twin candidates") {
    const std::vector<PrimePower> core = {
        {Natural(2), 1}, {Natural(3), 1}, {Natural(5), 1}};
    const auto [lo, hi] = twin_candidates(core);
    CHECK(lo == 29);
    CHECK(hi == 31);
    CHECK_THROWS_AS(twin_candidates({}), InvalidPartitionError);
}

TEST_CASE("probability estimate on the worked example") {
    const auto res = evaluate(worked_example());
    const auto est = probability_estimate(res, Sign::Minus);
    // R- = 35, C = 5, pi(C) = 3, P = 3, pi(P) = 2: one residual prime (5).
    CHECK(est.pi_c == 3);
    CHECK(est.pi_p == 2);
    CHECK(est.n_exact == 1);
    CHECK(est.p_prime == 2.0 / 3.0);
    CHECK(est.p_divisible == 1.0 - 2.0 / 3.0);
    CHECK_FALSE(est.guaranteed);

    // Ruling out 5 as a known non-divisor shrinks the favorable set.
    const auto ex = probability_estimate(res, Sign::Minus, {Natural(5)});
    CHECK(ex.residual_count == 1);
    CHECK(ex.p_prime_residual == 1.0 / 3.0);
    CHECK(ex.p_prime == 2.0 / 3.0);
    // Exclusions are deduplicated and must be prime.
    const auto dup = probability_estimate(res, Sign::Minus, {Natural(5), Natural(5)});
    CHECK(dup.residual_count == 1);
    CHECK_THROWS_AS(probability_estimate(res, Sign::Minus, {Natural(4)}), DomainError);

    // The plus side: R+ = 37, C = 6, pi(C) = 3, N = 1.
    const auto plus = probability_estimate(res, Sign::Plus);
    CHECK(plus.pi_c == 3);
    CHECK(plus.n_exact == 1);
    CHECK(plus.p_prime == 2.0 / 3.0);

    // n_approx follows the PNT form and sits near the exact count.
    CHECK(est.n_approx == Approx(prime_pi_pnt(5.0) - prime_pi_pnt(3.0)).epsilon(1e-12));
}

TEST_CASE("probability estimate marks guaranteed cases") {
    const auto res = evaluate(
        Partition::make({{Natural(2), 1}, {Natural(3), 1}}, {{Natural(5), 1}}));
    const auto est = probability_estimate(res, Sign::Plus);
    CHECK(est.guaranteed);
    CHECK(est.n_exact == 0);
    // Every prime <= C is a known non-divisor; the ratio saturates.
    CHECK(est.p_prime >= 1.0);

    // Degenerate C < 2 rejects.
    const auto tiny = evaluate(Partition::make({{Natural(2), 1}}, {}));
    CHECK_THROWS_AS(probability_estimate(tiny, Sign::Minus), DomainError);
}
