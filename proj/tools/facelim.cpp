// facelim: prime generation and analysis via two-sided prime-power partitions.
//
// Exit codes: 0 success, 1 negative result (composite, no prime, no hit),
// 2 usage or runtime error.

#include <cctype>
#include <cstdio>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <facelim/catalog.hpp>
#include <facelim/error.hpp>
#include <facelim/experiments.hpp>
#include <facelim/fe.hpp>
#include <facelim/partition.hpp>
#include <facelim/primality.hpp>
#include <facelim/probability.hpp>
#include <facelim/sieve.hpp>

namespace {

using facelim::Natural;
using facelim::Sign;
using facelim::VerdictKind;
using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr const char* kUsage =
    "usage: facelim <command> [options]\n"
    "\n"
    "commands:\n"
    "  generate     evaluate partitions and report both resultants\n"
    "  check        test one number for primality\n"
    "  probability  estimate the prime probability of a partition's resultants\n"
    "  category     named prime families and constellation search\n"
    "  experiment   exhaustive partition enumeration; CSV and chart output\n"
    "  plot         render an experiment CSV to an SVG chart\n"
    "\n"
    "run `facelim <command> --help` for command options.\n";

constexpr const char* kGenerateHelp =
    "usage: facelim generate \"A=2^2*3^2;B=1\" [options]\n"
    "       facelim generate --first-l L [--strategy exhaustive|random] [options]\n"
    "\n"
    "  --first-l L       partitions of the first L primes (1..25)\n"
    "  --strategy S      exhaustive (default) or random\n"
    "  --count K         random: number of partitions (default 10);\n"
    "                    exhaustive: stop after K partitions\n"
    "  --seed S          RNG seed for --strategy random (echoed when omitted)\n"
    "  --filter5         apply the last-digit filter before testing\n"
    "  --rounds R        witness rounds above the deterministic range (default 40)\n"
    "  --json            machine-readable output\n";

constexpr const char* kCheckHelp =
    "usage: facelim check <n> [--rounds R] [--seed S] [--json]\n";

constexpr const char* kProbabilityHelp =
    "usage: facelim probability \"A=...;B=...\" [--exclude p1,p2,...] [--json]\n";

constexpr const char* kCategoryHelp =
    "usage: facelim category --list [--json]\n"
    "       facelim category <name> [param=value ...] [--json]\n"
    "       facelim category --constellation <kind> --core-l L\n"
    "                        [--exponent E] [--require-div3] [--json]\n"
    "\n"
    "constellation kinds: twin, sexy, triplet-p2-p6, triplet-p4-p6, quadruplet\n";

constexpr const char* kExperimentHelp =
    "usage: facelim experiment --table 3|4 --l-max N [options]\n"
    "\n"
    "  --table T         3 = prime distribution, 4 = bit-range statistics\n"
    "  --l-max N         largest list length; rows run over odd L (table 3\n"
    "                    from 1, table 4 from 11); N <= 25\n"
    "  --out PATH        CSV output (default table3.csv / table4.csv)\n"
    "  --plot PATH       also render the chart to this SVG path\n"
    "  --workers W       worker threads (default 1; result is identical)\n"
    "  --rule R          multiplicity (default) or distinct\n"
    "  --seed S          witness-derivation seed (default fixed)\n"
    "  --config PATH     key=value file; command-line flags override it\n"
    "  --json            machine-readable summary\n";

constexpr const char* kPlotHelp = "usage: facelim plot <in.csv> <out.svg>\n";

struct ParsedArgs {
    std::vector<std::string> positional;
    std::map<std::string, std::string> values;
    std::set<std::string> switches;

    bool has(const std::string& flag) const {
        return switches.count(flag) || values.count(flag);
    }
    const std::string& value(const std::string& flag) const { return values.at(flag); }
};

ParsedArgs parse_args(int argc, char** argv, int start,
                      const std::set<std::string>& value_flags,
                      const std::set<std::string>& switch_flags) {
    ParsedArgs out;
    for (int i = start; i < argc; ++i) {
        std::string tok = argv[i];
        if (tok.rfind("--", 0) != 0) {
            out.positional.push_back(std::move(tok));
            continue;
        }
        std::string key = tok;
        std::optional<std::string> inline_value;
        const auto eq = tok.find('=');
        if (eq != std::string::npos) {
            key = tok.substr(0, eq);
            inline_value = tok.substr(eq + 1);
        }
        if (switch_flags.count(key)) {
            if (inline_value) throw UsageError(key + " takes no value");
            out.switches.insert(key);
        } else if (value_flags.count(key)) {
            if (inline_value) {
                out.values[key] = *inline_value;
            } else if (i + 1 < argc) {
                out.values[key] = argv[++i];
            } else {
                throw UsageError(key + " needs a value");
            }
        } else {
            throw UsageError("unknown flag " + key);
        }
    }
    return out;
}

long long parse_ll(const std::string& text, const std::string& what) {
    try {
        size_t pos = 0;
        const long long v = std::stoll(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("invalid " + what + ": " + text);
    }
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    const long long v = parse_ll(text, what);
    if (v < 0) throw UsageError(what + " must be nonnegative");
    return static_cast<std::uint64_t>(v);
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

const char* verdict_text(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Composite: return "composite";
        case VerdictKind::ProbablePrime: return "probable prime";
        case VerdictKind::ProvenPrime: return "prime (proven)";
    }
    return "?";
}

const char* verdict_key(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Composite: return "composite";
        case VerdictKind::ProbablePrime: return "probable_prime";
        case VerdictKind::ProvenPrime: return "proven_prime";
    }
    return "?";
}

// ---------------------------------------------------------------- check ----

int cmd_check(const ParsedArgs& args) {
    if (args.positional.size() != 1) throw UsageError("check takes exactly one number");
    const Natural n = facelim::natural_from_decimal(args.positional[0]);
    const int rounds =
        args.values.count("--rounds") ? int(parse_ll(args.value("--rounds"), "rounds")) : 40;
    const std::uint64_t seed = args.values.count("--seed")
                                   ? parse_u64(args.value("--seed"), "seed")
                                   : facelim::kDefaultPrimalitySeed;
    const facelim::PrimalityVerdict verdict = facelim::is_prime(n, rounds, seed);
    if (args.has("--json")) {
        json j{{"n", facelim::to_decimal(n)}, {"verdict", verdict_key(verdict.kind)}};
        if (verdict.kind == VerdictKind::ProbablePrime) j["rounds"] = verdict.witness_rounds;
        std::printf("%s\n", j.dump().c_str());
    } else if (verdict.kind == VerdictKind::ProbablePrime) {
        std::printf("%s %s (%d rounds)\n", facelim::to_decimal(n).c_str(),
                    verdict_text(verdict.kind), verdict.witness_rounds);
    } else {
        std::printf("%s %s\n", facelim::to_decimal(n).c_str(), verdict_text(verdict.kind));
    }
    return verdict.kind == VerdictKind::Composite ? 1 : 0;
}

// ------------------------------------------------------------- generate ----

struct CandidateReport {
    std::string partition;
    Sign sign = Sign::Plus;
    Natural value;
    bool filtered = false;
    bool unit = false;
    bool guaranteed = false;
    facelim::PrimalityVerdict verdict{VerdictKind::Composite, 0};
};

CandidateReport assess(const facelim::Partition& part, const facelim::FEResult& res,
                       Sign sign, bool filter5, int rounds, std::uint64_t seed) {
    CandidateReport rep;
    rep.partition = part.format();
    rep.sign = sign;
    rep.value = res.r(sign);
    rep.guaranteed = res.guaranteed(sign);
    if (rep.value <= 1) {
        rep.unit = true;
        return rep;
    }
    if (filter5 && facelim::mod5_last_digit_filter(res.product_a, res.product_b, sign)) {
        rep.filtered = true;
        return rep;
    }
    rep.verdict = facelim::is_prime(rep.value, rounds, seed);
    return rep;
}

void print_candidate(const CandidateReport& rep) {
    const char* sign = rep.sign == Sign::Plus ? "R+" : "R-";
    std::string status;
    if (rep.unit) {
        status = "not prime (unit)";
    } else if (rep.filtered) {
        status = "filtered (last digit 0 or 5)";
    } else {
        status = verdict_text(rep.verdict.kind);
        if (rep.guaranteed && rep.verdict.kind != VerdictKind::Composite) {
            status += " [guaranteed]";
        }
    }
    std::printf("%s  %s = %s  %s\n", rep.partition.c_str(), sign,
                facelim::to_decimal(rep.value).c_str(), status.c_str());
}

json candidate_json(const CandidateReport& rep) {
    json j{{"partition", rep.partition},
           {"sign", rep.sign == Sign::Plus ? "+" : "-"},
           {"value", facelim::to_decimal(rep.value)}};
    if (rep.unit) {
        j["status"] = "unit";
    } else if (rep.filtered) {
        j["status"] = "filtered";
    } else {
        j["status"] = verdict_key(rep.verdict.kind);
        j["guaranteed"] = rep.guaranteed;
    }
    return j;
}

int cmd_generate(const ParsedArgs& args) {
    const bool filter5 = args.has("--filter5");
    const bool as_json = args.has("--json");
    const int rounds =
        args.values.count("--rounds") ? int(parse_ll(args.value("--rounds"), "rounds")) : 40;

    std::vector<facelim::Partition> parts;
    std::optional<std::uint64_t> echo_seed;
    std::uint64_t seed = facelim::kDefaultPrimalitySeed;
    if (args.values.count("--seed")) seed = parse_u64(args.value("--seed"), "seed");

    if (args.values.count("--first-l")) {
        if (!args.positional.empty()) {
            throw UsageError("pass either a partition spec or --first-l, not both");
        }
        const long long l = parse_ll(args.value("--first-l"), "--first-l");
        if (l < 1 || l > (long long)facelim::kMaxListLength) {
            throw UsageError("--first-l must be in 1.." +
                             std::to_string(facelim::kMaxListLength));
        }
        const std::string strategy =
            args.values.count("--strategy") ? args.value("--strategy") : "exhaustive";
        std::uint64_t count = args.values.count("--count")
                                  ? parse_u64(args.value("--count"), "--count")
                                  : 0;
        facelim::PartitionStream stream{unsigned(l)};
        if (strategy == "exhaustive") {
            std::uint64_t taken = 0;
            while (auto part = stream.next()) {
                if (count && taken >= count) break;
                parts.push_back(std::move(*part));
                ++taken;
            }
        } else if (strategy == "random") {
            if (count == 0) count = 10;
            if (!args.values.count("--seed")) {
                seed = std::random_device{}();
                echo_seed = seed;
            }
            const std::vector<std::uint64_t> primes = facelim::first_n_primes(unsigned(l));
            const std::uint64_t total = std::uint64_t(1) << (l - 1);
            std::uint64_t state = seed;
            for (std::uint64_t i = 0; i < count; ++i) {
                const std::uint64_t mask = splitmix64(state) % total;
                std::vector<facelim::PrimePower> a{{Natural(2), 1}}, b;
                for (unsigned bit = 1; bit < unsigned(l); ++bit) {
                    ((mask >> (bit - 1)) & 1 ? a : b).push_back({Natural(primes[bit]), 1});
                }
                parts.push_back(facelim::Partition::make(std::move(a), std::move(b)));
            }
        } else {
            throw UsageError("unknown strategy: " + strategy);
        }
    } else {
        if (args.positional.size() != 1) {
            throw UsageError("generate needs a partition spec or --first-l (see --help)");
        }
        parts.push_back(facelim::Partition::parse(args.positional[0]));
    }

    std::uint64_t primes_found = 0, tested = 0;
    json out = json::array();
    if (echo_seed && !as_json) std::printf("# seed=%llu\n", (unsigned long long)*echo_seed);
    for (const facelim::Partition& part : parts) {
        const facelim::FEResult res = facelim::evaluate(part);
        for (Sign sign : {Sign::Plus, Sign::Minus}) {
            const CandidateReport rep = assess(part, res, sign, filter5, rounds, seed);
            if (!rep.unit && !rep.filtered) {
                ++tested;
                if (rep.verdict.kind != VerdictKind::Composite) ++primes_found;
            }
            if (as_json) {
                out.push_back(candidate_json(rep));
            } else {
                print_candidate(rep);
            }
        }
    }
    if (as_json) {
        json summary{{"candidates", out},
                     {"tested", tested},
                     {"primes_found", primes_found}};
        if (echo_seed) summary["seed"] = *echo_seed;
        std::printf("%s\n", summary.dump().c_str());
    } else {
        std::printf("primes found: %llu of %llu tested (%zu partitions)\n",
                    (unsigned long long)primes_found, (unsigned long long)tested,
                    parts.size());
    }
    return primes_found > 0 ? 0 : 1;
}

// ----------------------------------------------------------- probability ----

void print_estimate_text(Sign sign, const Natural& r, const facelim::FEResult& res,
                         const std::vector<Natural>& excluded) {
    const char* tag = sign == Sign::Plus ? "R+" : "R-";
    std::printf("%s = %s\n", tag, facelim::to_decimal(r).c_str());
    try {
        const facelim::ProbabilityEstimate est =
            facelim::probability_estimate(res, sign, excluded);
        std::printf("  P = %s  C = %s\n", facelim::to_decimal(res.p_max).c_str(),
                    facelim::to_decimal(res.c(sign)).c_str());
        std::printf("  pi(P) = %llu  pi(C) = %llu\n", (unsigned long long)est.pi_p,
                    (unsigned long long)est.pi_c);
        std::printf("  N = %llu  N approx = %.4f\n", (unsigned long long)est.n_exact,
                    est.n_approx);
        std::printf("  P(X) divisible = %.4f  prime = %.4f\n", est.p_divisible,
                    est.p_prime);
        if (!excluded.empty()) {
            std::printf("  residual (%llu excluded) = %.4f\n",
                        (unsigned long long)est.residual_count, est.p_prime_residual);
        }
        if (est.guaranteed) {
            std::printf("  guaranteed prime (complete prefix, C <= P)\n");
        }
    } catch (const facelim::DomainError&) {
        std::printf("  degenerate (C < 2)\n");
    }
}

json estimate_json(Sign sign, const Natural& r, const facelim::FEResult& res,
                   const std::vector<Natural>& excluded) {
    json j{{"sign", sign == Sign::Plus ? "+" : "-"}, {"value", facelim::to_decimal(r)}};
    try {
        const facelim::ProbabilityEstimate est =
            facelim::probability_estimate(res, sign, excluded);
        j["p_max"] = facelim::to_decimal(res.p_max);
        j["c"] = facelim::to_decimal(res.c(sign));
        j["pi_p"] = est.pi_p;
        j["pi_c"] = est.pi_c;
        j["n_exact"] = est.n_exact;
        j["n_approx"] = est.n_approx;
        j["p_divisible"] = est.p_divisible;
        j["p_prime"] = est.p_prime;
        if (!excluded.empty()) {
            j["residual_count"] = est.residual_count;
            j["p_prime_residual"] = est.p_prime_residual;
        }
        j["guaranteed"] = est.guaranteed;
    } catch (const facelim::DomainError&) {
        j["degenerate"] = true;
    }
    return j;
}

int cmd_probability(const ParsedArgs& args) {
    if (args.positional.size() != 1) {
        throw UsageError("probability needs a partition spec (see --help)");
    }
    const facelim::Partition part = facelim::Partition::parse(args.positional[0]);
    std::vector<Natural> excluded;
    if (args.values.count("--exclude")) {
        std::string list = args.value("--exclude");
        size_t start = 0;
        while (start <= list.size()) {
            const size_t comma = list.find(',', start);
            const std::string item =
                list.substr(start, comma == std::string::npos ? comma : comma - start);
            if (!item.empty()) excluded.push_back(facelim::natural_from_decimal(item));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (excluded.empty()) throw UsageError("--exclude list is empty");
    }
    const facelim::FEResult res = facelim::evaluate(part);
    if (args.has("--json")) {
        json j{{"partition", part.format()},
               {"complete_prefix", res.complete_prefix},
               {"resultants",
                json::array({estimate_json(Sign::Plus, res.r_plus, res, excluded),
                             estimate_json(Sign::Minus, res.r_minus, res, excluded)})}};
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::printf("%s  complete prefix: %s\n", part.format().c_str(),
                    res.complete_prefix ? "yes" : "no");
        print_estimate_text(Sign::Plus, res.r_plus, res, excluded);
        print_estimate_text(Sign::Minus, res.r_minus, res, excluded);
    }
    return 0;
}

// -------------------------------------------------------------- category ----

facelim::ConstellationSpec constellation_by_name(const std::string& name) {
    std::string key;
    for (char c : name) {
        if (c != '-' && c != '_' && c != ' ') key += char(std::tolower((unsigned char)c));
    }
    if (key == "twin") return facelim::twin_spec();
    if (key == "sexy") return facelim::sexy_spec();
    if (key == "tripletp2p6") return facelim::triplet_p2_p6_spec();
    if (key == "tripletp4p6") return facelim::triplet_p4_p6_spec();
    if (key == "quadruplet") return facelim::quadruplet_spec();
    throw UsageError("unknown constellation: " + name +
                     " (twin, sexy, triplet-p2-p6, triplet-p4-p6, quadruplet)");
}

int cmd_category(const ParsedArgs& args) {
    const bool as_json = args.has("--json");

    if (args.has("--list")) {
        const auto& forms = facelim::list_categories();
        if (as_json) {
            json out = json::array();
            for (const auto& f : forms) {
                json params = json::array();
                for (const auto& p : f.params) {
                    params.push_back({{"name", p.name},
                                      {"min", p.min_value},
                                      {"max", p.max_value},
                                      {"constraint", p.constraint}});
                }
                out.push_back({{"name", f.name},
                               {"form", f.simplified_form},
                               {"criteria", f.criteria},
                               {"notes", f.notes},
                               {"params", params},
                               {"may_generalize", f.may_generalize}});
            }
            std::printf("%s\n", out.dump().c_str());
        } else {
            for (const auto& f : forms) {
                std::string params;
                for (const auto& p : f.params) {
                    if (!params.empty()) params += ", ";
                    params += p.name + " in [" + std::to_string(p.min_value) + "," +
                              std::to_string(p.max_value) + "]";
                    if (!p.constraint.empty()) params += " (" + p.constraint + ")";
                }
                std::printf("%-26s %-22s %s\n", f.name.c_str(), f.simplified_form.c_str(),
                            params.c_str());
            }
        }
        return 0;
    }

    if (args.values.count("--constellation")) {
        const facelim::ConstellationSpec base =
            constellation_by_name(args.value("--constellation"));
        facelim::ConstellationSpec spec = base;
        if (args.has("--require-div3")) spec.require_div3 = true;
        if (!args.values.count("--core-l")) throw UsageError("--constellation needs --core-l");
        const long long core = parse_ll(args.value("--core-l"), "--core-l");
        if (core < 1 || core > 24) throw UsageError("--core-l must be in 1..24");
        const unsigned exponent = args.values.count("--exponent")
                                      ? unsigned(parse_ll(args.value("--exponent"), "exponent"))
                                      : 1u;
        const auto hits = facelim::constellation_search(unsigned(core), spec, exponent);
        if (as_json) {
            json out = json::array();
            for (const auto& h : hits) {
                json values = json::array();
                for (const auto& v : h.values) values.push_back(facelim::to_decimal(v));
                out.push_back({{"subset", h.subset},
                               {"product", facelim::to_decimal(h.product)},
                               {"values", values}});
            }
            std::printf("%s\n", json{{"constellation", spec.name},
                                     {"core_primes", core},
                                     {"hits", out}}
                                    .dump()
                                    .c_str());
        } else {
            std::printf("%s over the first %lld primes:\n", spec.name.c_str(), core);
            for (const auto& h : hits) {
                std::string values;
                for (const auto& v : h.values) {
                    if (!values.empty()) values += ", ";
                    values += facelim::to_decimal(v);
                }
                std::printf("  %s  product=%s  (%s)\n", h.subset.c_str(),
                            facelim::to_decimal(h.product).c_str(), values.c_str());
            }
            std::printf("%zu hit%s\n", hits.size(), hits.size() == 1 ? "" : "s");
        }
        return hits.empty() ? 1 : 0;
    }

    if (args.positional.empty()) {
        throw UsageError("category needs a name, --list, or --constellation (see --help)");
    }
    const std::string& name = args.positional[0];
    facelim::Params params;
    for (size_t i = 1; i < args.positional.size(); ++i) {
        const std::string& kv = args.positional[i];
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw UsageError("category parameters are name=value, got: " + kv);
        }
        params[kv.substr(0, eq)] = parse_ll(kv.substr(eq + 1), "parameter " + kv);
    }
    const facelim::VerifyResult result = facelim::verify_category(name, params);
    const facelim::CategoryForm& form = facelim::find_category(name);
    if (as_json) {
        json j{{"category", form.name},
               {"partition", result.instance.partition.format()},
               {"sign", result.instance.sign == Sign::Plus ? "+" : "-"},
               {"value", facelim::to_decimal(result.instance.value)},
               {"verdict", verdict_key(result.verdict.kind)},
               {"generalized", result.instance.partition.generalized()}};
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::printf("%s  %s\n", form.name.c_str(), form.simplified_form.c_str());
        std::printf("  partition: %s  (%s)%s\n", result.instance.partition.format().c_str(),
                    result.instance.sign == Sign::Plus ? "R+" : "R-",
                    result.instance.partition.generalized() ? " [generalized]" : "");
        std::printf("  value = %s\n", facelim::to_decimal(result.instance.value).c_str());
        std::printf("  verdict: %s\n", verdict_text(result.verdict.kind));
    }
    return result.verdict.kind == VerdictKind::Composite ? 1 : 0;
}

// ------------------------------------------------------------ experiment ----

int cmd_experiment(const ParsedArgs& args) {
    facelim::RunConfig cfg;
    if (args.values.count("--config")) {
        cfg = facelim::parse_run_config(args.value("--config"));
    }
    if (args.values.count("--table")) {
        const long long t = parse_ll(args.value("--table"), "--table");
        if (t != 3 && t != 4) throw UsageError("--table must be 3 or 4");
        cfg.table = int(t);
    }
    if (args.values.count("--rule")) {
        const std::string& rule = args.value("--rule");
        if (rule == "multiplicity") {
            cfg.rule = facelim::CountRule::Multiplicity;
        } else if (rule == "distinct") {
            cfg.rule = facelim::CountRule::Distinct;
        } else {
            throw UsageError("--rule must be multiplicity or distinct");
        }
    }
    if (args.values.count("--workers")) {
        const long long w = parse_ll(args.value("--workers"), "--workers");
        if (w < 1 || w > 256) throw UsageError("--workers must be in 1..256");
        cfg.workers = unsigned(w);
    }
    if (args.values.count("--seed")) cfg.seed = parse_u64(args.value("--seed"), "seed");
    if (args.values.count("--out")) cfg.csv_path = args.value("--out");
    if (args.values.count("--plot")) cfg.plot_path = args.value("--plot");
    if (args.values.count("--l-max")) {
        const long long l_max = parse_ll(args.value("--l-max"), "--l-max");
        if (l_max < 1 || l_max > (long long)facelim::kMaxListLength) {
            throw UsageError("--l-max must be in 1.." +
                             std::to_string(facelim::kMaxListLength));
        }
        const unsigned first = cfg.table == 4 ? 11 : 1;
        if (cfg.table == 4 && l_max < 11) {
            throw UsageError("table 4 starts at L=11; --l-max must be >= 11");
        }
        cfg.l_values.clear();
        for (unsigned l = first; l <= unsigned(l_max); l += 2) cfg.l_values.push_back(l);
    }
    if (cfg.l_values.empty()) {
        throw UsageError("no list lengths: pass --l-max (or a --config with l_values)");
    }
    if (cfg.csv_path.empty()) {
        cfg.csv_path = cfg.table == 4 ? "table4.csv" : "table3.csv";
    }

    const bool as_json = args.has("--json");
    json summary{{"table", cfg.table}, {"csv", cfg.csv_path}};
    json json_rows = json::array();
    if (cfg.table == 3) {
        std::vector<facelim::ExperimentRow> rows;
        for (unsigned l : cfg.l_values) {
            rows.push_back(facelim::run_distribution(l, cfg.rule, cfg.workers, cfg.seed));
            const auto& r = rows.back();
            if (as_json) {
                json_rows.push_back({{"L", r.list_length},
                                     {"combinations", r.combinations},
                                     {"primes_found", r.primes_found},
                                     {"ratio", r.ratio}});
            } else {
                std::printf("L=%-2u combinations=%-8llu primes=%-8llu ratio=%.4f\n",
                            r.list_length, (unsigned long long)r.combinations,
                            (unsigned long long)r.primes_found, r.ratio);
            }
        }
        facelim::emit_csv(rows, cfg.csv_path);
        if (!cfg.plot_path.empty()) facelim::emit_plot(rows, cfg.plot_path);
    } else {
        std::vector<facelim::BitStatsRow> rows;
        for (unsigned l : cfg.l_values) {
            rows.push_back(facelim::run_bit_stats(l, cfg.workers, cfg.seed));
            const auto& r = rows.back();
            if (as_json) {
                json_rows.push_back({{"L", r.list_length},
                                     {"max_bit", r.max_bit},
                                     {"min_bit", r.min_bit},
                                     {"baseline_max", r.baseline_max},
                                     {"baseline_min", r.baseline_min},
                                     {"observed_ratio", r.observed_ratio}});
            } else {
                std::printf(
                    "L=%-2u g=%-3u h=%-3u baseline_g=%.4f baseline_h=%.4f observed=%.4f\n",
                    r.list_length, r.max_bit, r.min_bit, r.baseline_max, r.baseline_min,
                    r.observed_ratio);
            }
        }
        facelim::emit_csv(rows, cfg.csv_path);
        if (!cfg.plot_path.empty()) facelim::emit_plot(rows, cfg.plot_path);
    }
    if (as_json) {
        summary["rows"] = json_rows;
        if (!cfg.plot_path.empty()) summary["plot"] = cfg.plot_path;
        std::printf("%s\n", summary.dump().c_str());
    } else {
        std::printf("csv: %s\n", cfg.csv_path.c_str());
        if (!cfg.plot_path.empty()) std::printf("plot: %s\n", cfg.plot_path.c_str());
    }
    return 0;
}

// ------------------------------------------------------------------ plot ----

int cmd_plot(const ParsedArgs& args) {
    if (args.positional.size() != 2) throw UsageError("plot takes <in.csv> <out.svg>");
    const std::string& in = args.positional[0];
    const std::string& out = args.positional[1];
    // Schema is detected from the header line.
    std::FILE* f = std::fopen(in.c_str(), "rb");
    if (!f) throw UsageError("cannot open " + in);
    char header[128] = {0};
    if (!std::fgets(header, sizeof header, f)) {
        std::fclose(f);
        throw UsageError("empty CSV: " + in);
    }
    std::fclose(f);
    const std::string head(header);
    if (head.rfind("L,combinations", 0) == 0) {
        facelim::emit_plot(facelim::parse_experiment_csv(in), out);
    } else if (head.rfind("L,max_bit", 0) == 0) {
        facelim::emit_plot(facelim::parse_bitstats_csv(in), out);
    } else {
        throw UsageError("unrecognized CSV header in " + in);
    }
    std::printf("plot: %s\n", out.c_str());
    return 0;
}

struct CommandDef {
    const char* name;
    const char* help;
    std::set<std::string> value_flags;
    std::set<std::string> switch_flags;
    int (*run)(const ParsedArgs&);
};

const CommandDef kCommands[] = {
    {"generate", kGenerateHelp,
     {"--first-l", "--strategy", "--count", "--seed", "--rounds"},
     {"--filter5", "--json"},
     cmd_generate},
    {"check", kCheckHelp, {"--rounds", "--seed"}, {"--json"}, cmd_check},
    {"probability", kProbabilityHelp, {"--exclude"}, {"--json"}, cmd_probability},
    {"category", kCategoryHelp,
     {"--constellation", "--core-l", "--exponent"},
     {"--list", "--require-div3", "--json"},
     cmd_category},
    {"experiment", kExperimentHelp,
     {"--table", "--l-max", "--out", "--plot", "--workers", "--rule", "--seed", "--config"},
     {"--json"},
     cmd_experiment},
    {"plot", kPlotHelp, {}, {}, cmd_plot},
};

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2 || std::string(argv[1]) == "--help" || std::string(argv[1]) == "-h") {
        std::fputs(kUsage, argc < 2 ? stderr : stdout);
        return argc < 2 ? 2 : 0;
    }
    if (std::string(argv[1]) == "--version") {
        std::puts("facelim 0.1.0");
        return 0;
    }
    const std::string verb = argv[1];
    for (const CommandDef& cmd : kCommands) {
        if (verb != cmd.name) continue;
        if (argc > 2 && (std::string(argv[2]) == "--help" || std::string(argv[2]) == "-h")) {
            std::fputs(cmd.help, stdout);
            return 0;
        }
        try {
            const ParsedArgs args =
                parse_args(argc, argv, 2, cmd.value_flags, cmd.switch_flags);
            return cmd.run(args);
        } catch (const UsageError& e) {
            std::fprintf(stderr, "facelim %s: %s\n", cmd.name, e.what());
            std::fputs(cmd.help, stderr);
            return 2;
        } catch (const facelim::Error& e) {
            std::fprintf(stderr, "facelim %s: %s\n", cmd.name, e.what());
            return 2;
        }
    }
    std::fprintf(stderr, "facelim: unknown command '%s'\n\n%s", verb.c_str(), kUsage);
    return 2;
}
