#include "facelim/partition.hpp"

#include <algorithm>
#include <cctype>

#include "facelim/error.hpp"
#include "facelim/primality.hpp"
#include "facelim/sieve.hpp"

namespace facelim {

namespace {

void sort_and_check_side(std::vector<PrimePower>& side, bool strict, const char* name) {
    std::sort(side.begin(), side.end(),
              [](const PrimePower& x, const PrimePower& y) { return x.base < y.base; });
    for (std::size_t i = 0; i < side.size(); ++i) {
        const PrimePower& pp = side[i];
        if (pp.exponent < 1) {
            throw InvalidPartitionError("exponent must be >= 1 in side " + std::string(name));
        }
        if (pp.base < 2) {
            throw InvalidPartitionError("base " + to_decimal(pp.base) + " invalid in side " + name);
        }
        if (i > 0 && side[i - 1].base == pp.base) {
            throw InvalidPartitionError("duplicate base " + to_decimal(pp.base) + " in side " + name);
        }
        if (strict && is_prime(pp.base).kind == VerdictKind::Composite) {
            throw InvalidPartitionError("base " + to_decimal(pp.base) + " is not prime");
        }
    }
}

void check_disjoint(const std::vector<PrimePower>& a, const std::vector<PrimePower>& b) {
    // Both sides are sorted; walk them like a merge.
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].base == b[j].base) {
            throw InvalidPartitionError("base " + to_decimal(a[i].base) + " appears in both sides");
        }
        (a[i].base < b[j].base) ? ++i : ++j;
    }
}

Natural side_product(const std::vector<PrimePower>& side) {
    Natural prod = 1;
    for (const PrimePower& pp : side) prod *= pp.value();
    return prod;
}

void format_side(const std::vector<PrimePower>& side, std::string& out) {
    if (side.empty()) {
        out += '1';
        return;
    }
    for (std::size_t i = 0; i < side.size(); ++i) {
        if (i > 0) out += '*';
        out += to_decimal(side[i].base);
        if (side[i].exponent != 1) {
            out += '^';
            out += std::to_string(side[i].exponent);
        }
    }
}

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    }
    return out;
}

std::vector<PrimePower> parse_side(std::string_view body) {
    if (body.empty()) throw InvalidPartitionError("empty side expression");
    if (body == "1") return {};
    std::vector<PrimePower> side;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t star = body.find('*', pos);
        std::string_view term = body.substr(pos, star == std::string_view::npos ? star : star - pos);
        if (term.empty()) throw InvalidPartitionError("empty term in partition spec");
        std::size_t caret = term.find('^');
        PrimePower pp;
        if (caret == std::string_view::npos) {
            pp.base = natural_from_decimal(term);
            pp.exponent = 1;
        } else {
            pp.base = natural_from_decimal(term.substr(0, caret));
            const Natural e = natural_from_decimal(term.substr(caret + 1));
            if (e < 1 || e > 1u << 30) throw InvalidPartitionError("exponent out of range");
            pp.exponent = static_cast<unsigned>(e);
        }
        side.push_back(std::move(pp));
        if (star == std::string_view::npos) break;
        pos = star + 1;
    }
    return side;
}

}  // namespace

Natural PrimePower::value() const { return pow_natural(base, exponent); }

Partition Partition::make(std::vector<PrimePower> side_a, std::vector<PrimePower> side_b,
                          std::string label) {
    Partition p;
    sort_and_check_side(side_a, /*strict=*/true, "A");
    sort_and_check_side(side_b, /*strict=*/true, "B");
    check_disjoint(side_a, side_b);
    p.a_ = std::move(side_a);
    p.b_ = std::move(side_b);
    p.label_ = std::move(label);
    return p;
}

Partition Partition::make_generalized(std::vector<PrimePower> side_a,
                                      std::vector<PrimePower> side_b, std::string label) {
    Partition p;
    sort_and_check_side(side_a, /*strict=*/false, "A");
    sort_and_check_side(side_b, /*strict=*/false, "B");
    check_disjoint(side_a, side_b);
    p.a_ = std::move(side_a);
    p.b_ = std::move(side_b);
    p.label_ = std::move(label);
    p.generalized_ = true;
    return p;
}

Natural Partition::product_a() const { return side_product(a_); }
Natural Partition::product_b() const { return side_product(b_); }

Natural Partition::max_base() const {
    if (a_.empty() && b_.empty()) {
        throw InvalidPartitionError("no bases: both sides empty");
    }
    Natural m = 0;
    if (!a_.empty()) m = a_.back().base;           // sides are sorted ascending
    if (!b_.empty()) m = std::max(m, b_.back().base);
    return m;
}

bool Partition::is_complete_prefix() const {
    if (a_.empty() && b_.empty()) return false;
    std::vector<Natural> bases;
    bases.reserve(a_.size() + b_.size());
    for (const PrimePower& pp : a_) bases.push_back(pp.base);
    for (const PrimePower& pp : b_) bases.push_back(pp.base);
    std::sort(bases.begin(), bases.end());
    // Exactly the first k primes, for k = number of distinct bases.
    const std::vector<std::uint64_t> prefix = first_n_primes(bases.size());
    for (std::size_t i = 0; i < bases.size(); ++i) {
        if (bases[i] != prefix[i]) return false;
    }
    return true;
}

std::string Partition::format() const {
    std::string out = "A=";
    format_side(a_, out);
    out += ";B=";
    format_side(b_, out);
    return out;
}

Partition Partition::parse(std::string_view text, bool strict) {
    const std::string compact = strip_spaces(text);
    // Expected shape: A=<side>;B=<side> (case-insensitive side names).
    auto fail = [&] {
        throw InvalidPartitionError("malformed partition spec: " + std::string(text) +
                                    " (expected e.g. \"A=2^2*3^2;B=1\")");
    };
    if (compact.size() < 7) fail();
    if ((compact[0] != 'A' && compact[0] != 'a') || compact[1] != '=') fail();
    const std::size_t semi = compact.find(';');
    if (semi == std::string::npos || semi + 2 >= compact.size()) fail();
    if ((compact[semi + 1] != 'B' && compact[semi + 1] != 'b') || compact[semi + 2] != '=') fail();
    std::vector<PrimePower> side_a, side_b;
    try {
        side_a = parse_side(std::string_view(compact).substr(2, semi - 2));
        side_b = parse_side(std::string_view(compact).substr(semi + 3));
    } catch (const DomainError& e) {
        throw InvalidPartitionError(std::string("bad number in partition spec: ") + e.what());
    }
    return strict ? make(std::move(side_a), std::move(side_b))
                  : make_generalized(std::move(side_a), std::move(side_b));
}

}  // namespace facelim
