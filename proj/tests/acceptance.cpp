// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Each check pins the library against hand-verified or independently derived
// values with explicit tolerances and wall-clock budgets.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <facelim/catalog.hpp>
#include <facelim/error.hpp>
#include <facelim/experiments.hpp>
#include <facelim/fe.hpp>
#include <facelim/partition.hpp>
#include <facelim/primality.hpp>
#include <facelim/probability.hpp>
#include <facelim/sieve.hpp>

using namespace facelim;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int criterion, bool ok, const std::string& detail, double elapsed,
            double budget) {
    const bool in_budget = elapsed <= budget;
    const bool pass = ok && in_budget;
    if (!pass) ++g_failures;
    std::printf("%s criterion %d: %s [%.1fs/%.0fs]%s\n", pass ? "PASS" : "FAIL",
                criterion, detail.c_str(), elapsed, budget,
                in_budget ? "" : " (over budget)");
    std::fflush(stdout);
}

// ------------------------------------------------------------- criterion 1 --

struct DistExpect {
    unsigned list_length;
    std::uint64_t combinations;
    std::uint64_t primes;  // source value under the multiplicity rule
};

void criterion_1() {
    const auto start = Clock::now();
    // Tier 1 budget 60s, extended tier 600s total.
    const std::vector<DistExpect> tier1 = {
        {1, 1, 1},   {3, 4, 7},     {5, 16, 25},    {7, 64, 79},
        {9, 256, 256}, {11, 1024, 887}, {13, 4096, 2808},
    };
    const std::vector<DistExpect> tier2 = {
        {15, 16384, 10405},
        {17, 65536, 34450},
        {19, 262144, 120504},
        {21, 1048576, 418223},
    };
    bool ok = true;
    std::string note;
    double tier1_elapsed = 0.0;
    for (const auto& exp : tier1) {
        const auto full = run_full(exp.list_length, CountRule::Distinct);
        if (full.distribution.combinations != exp.combinations) ok = false;
        if (full.multiplicity_count != exp.primes) {
            // Deviation procedure: the deviating row is reported under both
            // counting rules. L=9 is the single known source misprint (the
            // sweep and an independent trial-division recount both give 255);
            // the hand-verified golden rows L=1 and L=3 must never deviate.
            std::ostringstream os;
            os << "; L=" << exp.list_length << " multiplicity="
               << full.multiplicity_count << " distinct=" << full.distinct_count
               << " vs source " << exp.primes;
            if (exp.list_length == 9 && full.multiplicity_count == 255) {
                os << " (documented source misprint)";
            } else {
                ok = false;
                os << " (unexpected deviation)";
            }
            note += os.str();
        }
    }
    tier1_elapsed = seconds_since(start);
    if (tier1_elapsed > 60.0) {
        ok = false;
        note += "; tier 1 exceeded its 60s budget";
    }
    for (const auto& exp : tier2) {
        const auto row = run_distribution(exp.list_length);
        if (row.combinations != exp.combinations || row.primes_found != exp.primes) {
            ok = false;
            std::ostringstream os;
            os << "; L=" << exp.list_length << " got (" << row.combinations << ", "
               << row.primes_found << ") want (" << exp.combinations << ", "
               << exp.primes << ")";
            note += os.str();
        }
    }
    report(1, ok, "distribution sweep L=1..21 matches the source counts" + note,
           seconds_since(start), 600.0);
}

// ------------------------------------------------------------- criterion 2 --

void criterion_2() {
    const auto start = Clock::now();
    struct BitExpect {
        unsigned list_length, g, h;
        double baseline_g, baseline_h, observed;
    };
    const std::vector<BitExpect> expects = {
        {11, 38, 11, 0.0380, 0.1312, 0.8662},
        {13, 49, 17, 0.0294, 0.0849, 0.6855},
        {15, 59, 21, 0.0245, 0.0687, 0.6351},
    };
    const double tol = 5e-4;
    bool ok = true;
    std::string note;
    for (const auto& exp : expects) {
        const auto row = run_bit_stats(exp.list_length);
        const bool row_ok = row.max_bit == exp.g && row.min_bit == exp.h &&
                            std::fabs(row.baseline_max - exp.baseline_g) <= tol &&
                            std::fabs(row.baseline_min - exp.baseline_h) <= tol &&
                            std::fabs(row.observed_ratio - exp.observed) <= tol;
        if (!row_ok) {
            ok = false;
            std::ostringstream os;
            os << "; L=" << exp.list_length << " got g=" << row.max_bit
               << " h=" << row.min_bit << " baselines " << row.baseline_max << "/"
               << row.baseline_min << " observed " << row.observed_ratio;
            note += os.str();
        }
    }
    report(2, ok,
           "bit-range rows L=11,13,15 match (g, h) exactly and ratios to 5e-4" + note,
           seconds_since(start), 60.0);
}

// ------------------------------------------------------------- criterion 3 --

void criterion_3() {
    const auto start = Clock::now();
    bool ok = true;
    std::string note;
    const auto res = evaluate(Partition::parse("A=2^2*3^2;B=1"));
    if (res.r_minus != 35 || res.c_minus != 5 || res.p_max != 3) ok = false;
    if (is_prime(res.r_minus).kind != VerdictKind::Composite) ok = false;
    const auto est = probability_estimate(res, Sign::Minus);
    if (est.pi_c != 3 || est.pi_p != 2 || est.n_exact != 1) ok = false;
    if (est.p_prime != 2.0 / 3.0) ok = false;
    const auto ex = probability_estimate(res, Sign::Minus, {Natural(5)});
    if (ex.p_prime_residual != 1.0 / 3.0) ok = false;
    if (!ok) {
        std::ostringstream os;
        os << "; got R-=" << to_decimal(res.r_minus) << " C=" << to_decimal(res.c_minus)
           << " pi(C)=" << est.pi_c << " pi(P)=" << est.pi_p << " p=" << est.p_prime
           << " residual=" << ex.p_prime_residual;
        note = os.str();
    }
    report(3, ok,
           "worked example: R-=35 composite, pi(C)=3, pi(P)=2, "
           "p=2/3 and 1/3 after excluding 5, both exact" + note,
           seconds_since(start), 60.0);
}

// ------------------------------------------------------- criteria 4 and 5 --

void criteria_4_and_5() {
    const auto start = Clock::now();
    const auto primes = first_n_primes(8);
    bool coprime_ok = true;
    bool guarantee_ok = true;
    std::uint64_t cases = 0;
    std::uint64_t guaranteed_seen = 0;
    std::string note4, note5;

    std::vector<unsigned> exps(8, 1);
    for (;;) {
        for (unsigned mask = 0; mask < (1u << 7); ++mask) {
            std::vector<PrimePower> a, b;
            a.push_back({Natural(primes[0]), exps[0]});
            for (unsigned i = 1; i < 8; ++i) {
                ((mask >> (i - 1)) & 1u ? a : b).push_back({Natural(primes[i]), exps[i]});
            }
            const Partition part = Partition::make(std::move(a), std::move(b));
            const FEResult res = evaluate(part);
            ++cases;
            if (!coprime_check(part, res.r_plus) || !coprime_check(part, res.r_minus)) {
                coprime_ok = false;
                if (note4.empty()) note4 = "; first failure at " + part.format();
            }
            for (Sign sign : {Sign::Plus, Sign::Minus}) {
                if (!res.guaranteed(sign)) continue;
                ++guaranteed_seen;
                if (trial_division_oracle(res.r(sign)).kind != VerdictKind::ProvenPrime) {
                    guarantee_ok = false;
                    if (note5.empty()) {
                        note5 = "; non-prime guaranteed value " + to_decimal(res.r(sign)) +
                                " at " + part.format();
                    }
                }
            }
        }
        // Next exponent vector over {1,2,3}^8.
        unsigned digit = 0;
        while (digit < 8 && ++exps[digit] > 3) exps[digit++] = 1;
        if (digit == 8) break;
    }
    const double elapsed = seconds_since(start);
    if (cases != 839808) {
        coprime_ok = false;
        guarantee_ok = false;
        note4 += "; enumerated " + std::to_string(cases) + " cases, want 839808";
    }
    if (guaranteed_seen == 0) {
        guarantee_ok = false;
        note5 += "; no guaranteed case seen (vacuous)";
    }
    // Incomplete-prefix regression: A={2,7} yields R+ = 15 = 3*5 and the
    // guarantee flag must stay off even though isqrt(15) = 3 <= 7.
    const auto trap = evaluate(Partition::make({{Natural(2), 1}, {Natural(7), 1}}, {}));
    if (trap.r_plus != 15 || trap.guaranteed_plus) {
        guarantee_ok = false;
        note5 += "; incomplete-prefix regression failed";
    }
    report(4, coprime_ok,
           "both resultants coprime to every base across all 839808 "
           "exponent/split cases of the first 8 primes" + note4,
           elapsed, 120.0);
    report(5, guarantee_ok,
           "every guaranteed resultant in the same sweep is prime by trial "
           "division (" + std::to_string(guaranteed_seen) +
               " guaranteed cases) and the incomplete-prefix trap stays off" + note5,
           elapsed, 120.0);
}

// ------------------------------------------------------------- criterion 6 --

void criterion_6() {
    const auto start = Clock::now();
    bool ok = true;
    std::string note;
    for (std::uint64_t n = 0; n < 1000000; ++n) {
        const bool fast = is_prime(Natural(n)).kind != VerdictKind::Composite;
        const bool slow = trial_division_oracle(Natural(n)).kind != VerdictKind::Composite;
        if (fast != slow) {
            ok = false;
            note = "; first disagreement at n=" + std::to_string(n);
            break;
        }
    }
    report(6, ok, "primality verdicts agree with trial division for all n < 10^6" + note,
           seconds_since(start), 60.0);
}

// ------------------------------------------------------------- criterion 7 --

void criterion_7() {
    const auto start = Clock::now();
    bool ok = true;
    std::string note;
    auto expect_value = [&](const char* name, const Params& params, std::uint64_t want) {
        const auto inst = instantiate(name, params);
        if (inst.value != want) {
            ok = false;
            note += "; " + std::string(name) + " gave " + to_decimal(inst.value) +
                    " want " + std::to_string(want);
        }
    };
    const std::uint64_t mersenne[] = {3, 7, 31, 127, 8191};
    const long long mersenne_p[] = {2, 3, 5, 7, 13};
    for (int i = 0; i < 5; ++i) expect_value("mersenne", {{"p", mersenne_p[i]}}, mersenne[i]);
    const auto m11 = verify_category("mersenne", {{"p", 11}});
    if (m11.instance.value != 2047 || m11.verdict.kind != VerdictKind::Composite) {
        ok = false;
        note += "; mersenne p=11 must be the composite 2047";
    }
    const std::uint64_t euclid[] = {3, 7, 31, 211, 2311};
    for (long long k = 1; k <= 5; ++k) expect_value("euclid", {{"k", k}}, euclid[k - 1]);
    const std::uint64_t fermat[] = {3, 5, 17, 257, 65537};
    for (long long n = 0; n <= 4; ++n) expect_value("fermat", {{"n", n}}, fermat[n]);

    const auto twins = twin_candidates({{Natural(2), 1}, {Natural(3), 1}, {Natural(5), 1}});
    if (twins.first != 29 || twins.second != 31) {
        ok = false;
        note += "; twin pair over {2,3,5} gave (" + to_decimal(twins.first) + ", " +
                to_decimal(twins.second) + ")";
    }
    const auto hits = constellation_search(3, twin_spec());
    bool found = false;
    for (const auto& hit : hits) {
        if (hit.product == 30 && hit.values == std::vector<Natural>{29, 31}) found = true;
    }
    if (!found) {
        ok = false;
        note += "; twin search over the first 3 primes missed (29, 31)";
    }
    report(7, ok,
           "catalog golden rows (Mersenne, Euclid, Fermat) and the twin pair "
           "over {2,3,5} reproduce" + note,
           seconds_since(start), 60.0);
}

// ------------------------------------------------------------- criterion 8 --

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) return {};
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void criterion_8() {
    const auto start = Clock::now();
    bool ok = true;
    std::string note;
    const char* bin = std::getenv("FACELIM_BIN");
    if (!bin || !*bin) {
        report(8, false, "FACELIM_BIN not set; cannot drive the command line",
               seconds_since(start), 120.0);
        return;
    }
    struct Job {
        int table;
        const char* one;
        const char* eight;
    };
    const Job jobs[] = {
        {3, "acc_t3_w1.csv", "acc_t3_w8.csv"},
        {4, "acc_t4_w1.csv", "acc_t4_w8.csv"},
    };
    for (const Job& job : jobs) {
        for (int workers : {1, 8}) {
            std::ostringstream cmd;
            cmd << bin << " experiment --table " << job.table
                << " --l-max 13 --workers " << workers << " --out "
                << (workers == 1 ? job.one : job.eight) << " >/dev/null 2>&1";
            if (std::system(cmd.str().c_str()) != 0) {
                ok = false;
                note += "; table " + std::to_string(job.table) + " workers=" +
                        std::to_string(workers) + " run failed";
            }
        }
        const std::string a = slurp(job.one);
        const std::string b = slurp(job.eight);
        if (a.empty() || a != b) {
            ok = false;
            note += "; table " + std::to_string(job.table) + " outputs differ";
        }
        std::remove(job.one);
        std::remove(job.eight);
    }
    report(8, ok,
           "command-line runs with 1 and 8 workers emit byte-identical CSVs "
           "for both tables" + note,
           seconds_since(start), 120.0);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criteria_4_and_5();
    criterion_6();
    criterion_7();
    criterion_8();
    return g_failures == 0 ? 0 : 1;
}
