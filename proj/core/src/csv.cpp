#include <charconv>
#include <fstream>
#include <string>
#include <vector>

#include "facelim/error.hpp"
#include "facelim/experiments.hpp"

namespace facelim {

namespace {

// Shortest round-trip representation: parse(format(v)) == v bit for bit,
// and the text never depends on locale or stream state.
std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double_field(const std::string& s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw DomainError("bad numeric field in CSV: '" + s + "'");
    }
    return v;
}

std::uint64_t parse_u64_field(const std::string& s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw DomainError("bad integer field in CSV: '" + s + "'");
    }
    return v;
}

}  // namespace

void emit_csv(const std::vector<ExperimentRow>& rows, const std::string& path) {
    if (rows.empty()) throw DomainError("no rows to write");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << "L,combinations,primes_found,ratio,log2_combinations\n";
    for (const ExperimentRow& r : rows) {
        out << r.list_length << ',' << r.combinations << ',' << r.primes_found << ','
            << format_double(r.ratio) << ',' << format_double(r.log2_combinations) << '\n';
    }
    if (!out) throw Error("write failed: " + path);
}

void emit_csv(const std::vector<BitStatsRow>& rows, const std::string& path) {
    if (rows.empty()) throw DomainError("no rows to write");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << "L,max_bit,min_bit,baseline_max,baseline_min,observed_ratio\n";
    for (const BitStatsRow& r : rows) {
        out << r.list_length << ',' << r.max_bit << ',' << r.min_bit << ','
            << format_double(r.baseline_max) << ',' << format_double(r.baseline_min) << ','
            << format_double(r.observed_ratio) << '\n';
    }
    if (!out) throw Error("write failed: " + path);
}

std::vector<ExperimentRow> parse_experiment_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line) ||
        split_csv_line(line) != std::vector<std::string>{"L", "combinations", "primes_found",
                                                         "ratio", "log2_combinations"}) {
        throw DomainError("not a distribution CSV: " + path);
    }
    std::vector<ExperimentRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 5) throw DomainError("bad CSV row: " + line);
        ExperimentRow r;
        r.list_length = static_cast<unsigned>(parse_u64_field(f[0]));
        r.combinations = parse_u64_field(f[1]);
        r.primes_found = parse_u64_field(f[2]);
        r.ratio = parse_double_field(f[3]);
        r.log2_combinations = parse_double_field(f[4]);
        rows.push_back(r);
    }
    return rows;
}

std::vector<BitStatsRow> parse_bitstats_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line) ||
        split_csv_line(line) != std::vector<std::string>{"L", "max_bit", "min_bit",
                                                         "baseline_max", "baseline_min",
                                                         "observed_ratio"}) {
        throw DomainError("not a bit-stats CSV: " + path);
    }
    std::vector<BitStatsRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 6) throw DomainError("bad CSV row: " + line);
        BitStatsRow r;
        r.list_length = static_cast<unsigned>(parse_u64_field(f[0]));
        r.max_bit = static_cast<unsigned>(parse_u64_field(f[1]));
        r.min_bit = static_cast<unsigned>(parse_u64_field(f[2]));
        r.baseline_max = parse_double_field(f[3]);
        r.baseline_min = parse_double_field(f[4]);
        r.observed_ratio = parse_double_field(f[5]);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace facelim
