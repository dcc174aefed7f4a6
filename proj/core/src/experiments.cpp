#include "facelim/experiments.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "facelim/error.hpp"
#include "facelim/sieve.hpp"

namespace facelim {

namespace {

void check_list_length(unsigned L) {
    if (L < 1 || L > kMaxListLength) {
        throw DomainError("list length " + std::to_string(L) + " outside [1, " +
                          std::to_string(kMaxListLength) + "]");
    }
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Partition partition_from_mask(const std::vector<std::uint64_t>& primes, std::uint64_t mask) {
    std::vector<PrimePower> a, b;
    a.push_back({Natural(primes[0]), 1});  // 2 is pinned to side A
    for (std::size_t i = 1; i < primes.size(); ++i) {
        ((mask >> (i - 1)) & 1u ? a : b).push_back({Natural(primes[i]), 1});
    }
    return Partition::make(std::move(a), std::move(b));
}

// Tallies for one contiguous chunk of the mask space. Merging is pure
// addition / min / max / concatenation, so the combined result cannot
// depend on how the space was chunked.
struct ChunkTally {
    std::uint64_t multiplicity = 0;
    unsigned max_bit_prime = 0;
    unsigned min_bit_prime = ~0u;
    unsigned max_bit_any = 0;
    unsigned min_bit_any = ~0u;
    std::vector<uint128> prime_values;  // collected only under Distinct

    void merge(const ChunkTally& other) {
        multiplicity += other.multiplicity;
        max_bit_prime = std::max(max_bit_prime, other.max_bit_prime);
        min_bit_prime = std::min(min_bit_prime, other.min_bit_prime);
        max_bit_any = std::max(max_bit_any, other.max_bit_any);
        min_bit_any = std::min(min_bit_any, other.min_bit_any);
        prime_values.insert(prime_values.end(), other.prime_values.begin(),
                            other.prime_values.end());
    }
};

ChunkTally scan_chunk(const std::vector<std::uint64_t>& primes, std::uint64_t lo,
                      std::uint64_t hi, bool collect_values, std::uint64_t seed) {
    const unsigned L = static_cast<unsigned>(primes.size());
    ChunkTally tally;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        uint128 pa = primes[0];
        uint128 pb = 1;
        for (unsigned i = 1; i < L; ++i) {
            ((mask >> (i - 1)) & 1u ? pa : pb) *= primes[i];
        }
        const uint128 rp = pa + pb;
        const uint128 rm = pa >= pb ? pa - pb : pb - pa;
        for (const uint128 r : {rp, rm}) {
            if (r <= 1) continue;  // the unit resultant never counts
            const unsigned bits = bit_length_u128(r);
            tally.max_bit_any = std::max(tally.max_bit_any, bits);
            tally.min_bit_any = std::min(tally.min_bit_any, bits);
            if (is_prime_u128(r, 40, seed).kind != VerdictKind::Composite) {
                ++tally.multiplicity;
                tally.max_bit_prime = std::max(tally.max_bit_prime, bits);
                tally.min_bit_prime = std::min(tally.min_bit_prime, bits);
                if (collect_values) tally.prime_values.push_back(r);
            }
        }
        // Consistency sample, ~1% of partitions: no listed prime may divide
        // either resultant. A hit would mean arithmetic corruption.
        std::uint64_t h = seed ^ (mask * 0xff51afd7ed558ccdULL);
        if (splitmix64(h) % 100 == 0) {
            for (std::uint64_t p : primes) {
                if (rp % p == 0 || rm % p == 0) {
                    throw Error("coprimality violated at mask " + std::to_string(mask) +
                                ", prime " + std::to_string(p));
                }
            }
        }
    }
    return tally;
}

std::uint64_t parse_u64_field(const std::string& s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw DomainError("bad integer field: '" + s + "'");
    }
    return v;
}

}  // namespace

PartitionStream::PartitionStream(unsigned list_length) {
    check_list_length(list_length);
    primes_ = first_n_primes(list_length);
    total_ = std::uint64_t(1) << (list_length - 1);
}

std::optional<Partition> PartitionStream::next() {
    if (mask_ >= total_) return std::nullopt;
    return partition_from_mask(primes_, mask_++);
}

void for_each_partition(unsigned list_length, const std::function<void(const Partition&)>& fn) {
    PartitionStream stream(list_length);
    while (auto p = stream.next()) fn(*p);
}

FullRunResult run_full(unsigned list_length, CountRule rule, unsigned workers,
                       std::uint64_t seed) {
    check_list_length(list_length);
    if (workers < 1) throw DomainError("worker count must be >= 1");
    const std::vector<std::uint64_t> primes = first_n_primes(list_length);
    const std::uint64_t total = std::uint64_t(1) << (list_length - 1);
    const bool collect = rule == CountRule::Distinct;

    const unsigned n_threads = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, total));
    std::vector<ChunkTally> tallies(n_threads);
    std::vector<std::exception_ptr> errors(n_threads);
    {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            const std::uint64_t lo = total * t / n_threads;
            const std::uint64_t hi = total * (t + 1) / n_threads;
            pool.emplace_back([&, t, lo, hi] {
                try {
                    tallies[t] = scan_chunk(primes, lo, hi, collect, seed);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (std::thread& th : pool) th.join();
    }
    for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    ChunkTally sum;
    for (const ChunkTally& t : tallies) sum.merge(t);

    if (sum.multiplicity == 0) {
        throw Error("no prime resultant at L=" + std::to_string(list_length) +
                    "; bit statistics undefined");
    }

    FullRunResult res;
    res.multiplicity_count = sum.multiplicity;
    if (collect) {
        std::sort(sum.prime_values.begin(), sum.prime_values.end());
        sum.prime_values.erase(std::unique(sum.prime_values.begin(), sum.prime_values.end()),
                               sum.prime_values.end());
        res.distinct_count = sum.prime_values.size();
    }

    res.distribution.list_length = list_length;
    res.distribution.combinations = total;
    res.distribution.primes_found = collect ? res.distinct_count : res.multiplicity_count;
    res.distribution.ratio = static_cast<double>(res.distribution.primes_found) /
                             static_cast<double>(total);
    res.distribution.log2_combinations = static_cast<double>(list_length - 1);

    res.bits.list_length = list_length;
    res.bits.max_bit = sum.max_bit_prime;
    res.bits.min_bit = sum.min_bit_prime;
    res.bits.baseline_max = 1.0 / (sum.max_bit_prime * std::log(2.0));
    res.bits.baseline_min = 1.0 / (sum.min_bit_prime * std::log(2.0));
    res.bits.observed_ratio = static_cast<double>(res.multiplicity_count) /
                              static_cast<double>(total);
    res.max_bit_any = sum.max_bit_any;
    res.min_bit_any = sum.min_bit_any;
    return res;
}

ExperimentRow run_distribution(unsigned list_length, CountRule rule, unsigned workers,
                               std::uint64_t seed) {
    return run_full(list_length, rule, workers, seed).distribution;
}

BitStatsRow run_bit_stats(unsigned list_length, unsigned workers, std::uint64_t seed) {
    return run_full(list_length, CountRule::Multiplicity, workers, seed).bits;
}

RunConfig parse_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file: " + path);
    RunConfig cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string compact;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
        }
        if (compact.empty()) continue;
        const auto eq = compact.find('=');
        if (eq == std::string::npos) {
            throw DomainError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        const std::string key = compact.substr(0, eq);
        const std::string val = compact.substr(eq + 1);
        if (key == "table") {
            cfg.table = static_cast<int>(parse_u64_field(val));
        } else if (key == "l_values") {
            cfg.l_values.clear();
            std::stringstream ss(val);
            std::string item;
            while (std::getline(ss, item, ',')) {
                cfg.l_values.push_back(static_cast<unsigned>(parse_u64_field(item)));
            }
        } else if (key == "rule") {
            if (val == "multiplicity") {
                cfg.rule = CountRule::Multiplicity;
            } else if (val == "distinct") {
                cfg.rule = CountRule::Distinct;
            } else {
                throw DomainError("config: rule must be multiplicity or distinct");
            }
        } else if (key == "workers") {
            cfg.workers = static_cast<unsigned>(parse_u64_field(val));
        } else if (key == "seed") {
            cfg.seed = parse_u64_field(val);
        } else if (key == "out") {
            cfg.csv_path = val;
        } else if (key == "plot") {
            cfg.plot_path = val;
        } else {
            throw DomainError("config line " + std::to_string(line_no) + ": unknown key '" +
                              key + "'");
        }
    }
    return cfg;
}

}  // namespace facelim
