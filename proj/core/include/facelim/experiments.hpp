#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "facelim/partition.hpp"
#include "facelim/primality.hpp"

namespace facelim {

// Multiplicity: a prime value counts once per partition producing it (13
// shows up twice at L=3 and counts twice). Distinct: unique prime values.
enum class CountRule { Multiplicity, Distinct };

inline constexpr unsigned kMaxListLength = 25;

struct ExperimentRow {
    unsigned list_length = 0;
    std::uint64_t combinations = 0;  // 2^(L-1) unordered partitions
    std::uint64_t primes_found = 0;  // over both resultants, under the rule
    double ratio = 0.0;              // primes_found / combinations
    double log2_combinations = 0.0;  // truthful log2 (0 for one combination)
};

// Bit-range statistics over the primes generated at one L: g = bit length of
// the largest prime resultant, h = of the smallest. The extremes over all
// resultants are deliberately not used here; the full products at some L are
// composite and would overstate g (see max_bit_any in FullRunResult).
struct BitStatsRow {
    unsigned list_length = 0;
    unsigned max_bit = 0;        // g
    unsigned min_bit = 0;        // h
    double baseline_max = 0.0;   // 1 / ln(2^g)
    double baseline_min = 0.0;   // 1 / ln(2^h)
    double observed_ratio = 0.0; // multiplicity ratio at this L
};

struct RunConfig {
    std::vector<unsigned> l_values;
    CountRule rule = CountRule::Multiplicity;
    unsigned workers = 1;
    std::string csv_path;
    std::string plot_path;
    std::uint64_t seed = kDefaultPrimalitySeed;
    int table = 3;
};

// key=value per line, # comments. Keys: table, l_values (comma list), rule
// (multiplicity|distinct), workers, seed, out, plot. Unknown keys rejected.
RunConfig parse_run_config(const std::string& path);

// All 2^(L-1) unordered partitions of the first L primes, exponents 1,
// canonicalized so that side A always contains 2.
class PartitionStream {
public:
    explicit PartitionStream(unsigned list_length);
    std::optional<Partition> next();
    std::uint64_t total() const { return total_; }

private:
    std::vector<std::uint64_t> primes_;
    std::uint64_t mask_ = 0;
    std::uint64_t total_ = 0;
};

void for_each_partition(unsigned list_length, const std::function<void(const Partition&)>& fn);

// One full enumeration pass. distribution.primes_found follows `rule`;
// multiplicity_count is always the multiplicity tally (the ratio in `bits`
// uses it). *_any extremes cover every resultant > 1, prime or not.
struct FullRunResult {
    ExperimentRow distribution;
    BitStatsRow bits;
    std::uint64_t multiplicity_count = 0;
    std::uint64_t distinct_count = 0;  // filled only under CountRule::Distinct
    unsigned max_bit_any = 0;
    unsigned min_bit_any = 0;
};

FullRunResult run_full(unsigned list_length, CountRule rule = CountRule::Multiplicity,
                       unsigned workers = 1, std::uint64_t seed = kDefaultPrimalitySeed);

ExperimentRow run_distribution(unsigned list_length, CountRule rule = CountRule::Multiplicity,
                               unsigned workers = 1, std::uint64_t seed = kDefaultPrimalitySeed);

BitStatsRow run_bit_stats(unsigned list_length, unsigned workers = 1,
                          std::uint64_t seed = kDefaultPrimalitySeed);

// CSV emission; headers are part of the stable interface:
//   L,combinations,primes_found,ratio,log2_combinations
//   L,max_bit,min_bit,baseline_max,baseline_min,observed_ratio
// Doubles are written in shortest round-trip form, so parse(emit(rows))
// reproduces the rows exactly and output is byte-stable across runs.
void emit_csv(const std::vector<ExperimentRow>& rows, const std::string& path);
void emit_csv(const std::vector<BitStatsRow>& rows, const std::string& path);
std::vector<ExperimentRow> parse_experiment_csv(const std::string& path);
std::vector<BitStatsRow> parse_bitstats_csv(const std::string& path);

// Self-contained SVG. The distribution overload draws the ratio curve over
// log2(combinations); the bit-stats overload adds both 1/ln(2^bit) baseline
// curves under the observed curve. At least two rows required.
void emit_plot(const std::vector<ExperimentRow>& rows, const std::string& path);
void emit_plot(const std::vector<BitStatsRow>& rows, const std::string& path);

}  // namespace facelim
