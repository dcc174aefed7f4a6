#include "facelim/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "facelim/error.hpp"
#include "facelim/sieve.hpp"

namespace facelim {

namespace {

using Builder = std::function<Instantiation(const CategoryForm&, const Params&)>;

struct FormImpl {
    CategoryForm meta;
    Builder build;
};

std::string normalize(std::string_view name) {
    std::string out;
    for (char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    return out;
}

long long get_param(const CategoryForm& meta, const Params& params, const std::string& name) {
    const ParamSpec* spec = nullptr;
    for (const ParamSpec& ps : meta.params) {
        if (ps.name == name) spec = &ps;
    }
    if (!spec) throw Error("form " + meta.name + " has no parameter " + name);
    const auto it = params.find(name);
    if (it == params.end()) {
        throw DomainError(meta.name + ": missing parameter '" + name + "'");
    }
    if (it->second < spec->min_value || it->second > spec->max_value) {
        throw DomainError(meta.name + ": " + name + "=" + std::to_string(it->second) +
                          " outside [" + std::to_string(spec->min_value) + ", " +
                          std::to_string(spec->max_value) + "]");
    }
    return it->second;
}

void check_param_names(const CategoryForm& meta, const Params& params) {
    for (const auto& [key, value] : params) {
        bool known = false;
        for (const ParamSpec& ps : meta.params) known |= ps.name == key;
        if (!known) throw DomainError(meta.name + ": unknown parameter '" + key + "'");
    }
    for (const ParamSpec& ps : meta.params) {
        if (!params.count(ps.name)) {
            throw DomainError(meta.name + ": missing parameter '" + ps.name + "'");
        }
    }
}

// Trial-division factorization for parameter-sized values; exponents are
// scaled so factor_u64(n, s) describes n^s.
std::vector<PrimePower> factor_u64(std::uint64_t n, unsigned exp_scale = 1) {
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({Natural(p), e * exp_scale});
    }
    if (n > 1) out.push_back({Natural(n), exp_scale});
    return out;
}

void merge_power(std::vector<PrimePower>& side, const PrimePower& pp) {
    for (PrimePower& existing : side) {
        if (existing.base == pp.base) {
            existing.exponent += pp.exponent;
            return;
        }
    }
    side.push_back(pp);
}

void merge_factors(std::vector<PrimePower>& side, const std::vector<PrimePower>& factors) {
    for (const PrimePower& pp : factors) merge_power(side, pp);
}

bool all_bases_prime(const std::vector<PrimePower>& side) {
    for (const PrimePower& pp : side) {
        if (is_prime(pp.base).kind == VerdictKind::Composite) return false;
    }
    return true;
}

// Strict partition when every base is prime, generalized otherwise.
Partition make_auto(std::vector<PrimePower> a, std::vector<PrimePower> b, std::string label) {
    if (all_bases_prime(a) && all_bases_prime(b)) {
        return Partition::make(std::move(a), std::move(b), std::move(label));
    }
    return Partition::make_generalized(std::move(a), std::move(b), std::move(label));
}

std::vector<PrimePower> prime_prefix_side(unsigned k) {
    std::vector<PrimePower> side;
    for (std::uint64_t p : first_n_primes(k)) side.push_back({Natural(p), 1});
    return side;
}

Natural primorial(unsigned k) {
    Natural prod = 1;
    for (std::uint64_t p : first_n_primes(k)) prod *= p;
    return prod;
}

Instantiation finish(Partition partition, Sign sign, Natural value) {
    // Every builder is cross-checked: the partition must reproduce the
    // closed form through the ordinary evaluation path.
    const FEResult res = evaluate(partition);
    if (res.r(sign) != value) {
        throw Error("catalog builder mismatch for " + partition.label() + ": evaluated " +
                    to_decimal(res.r(sign)) + ", closed form " + to_decimal(value));
    }
    return Instantiation{std::move(partition), sign, std::move(value)};
}

void require(bool ok, const std::string& message) {
    if (!ok) throw DomainError(message);
}

std::vector<FormImpl> build_registry() {
    std::vector<FormImpl> reg;
    auto add = [&reg](CategoryForm meta, Builder fn) {
        reg.push_back({std::move(meta), std::move(fn)});
    };

    add({"Mersenne", "2^p - 1", "2^p - 1", "R-, A={2^p}, B={1}, p prime",
         "", {{"p", 2, 127, "prime"}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long p = get_param(meta, params, "p");
            require(is_prime(Natural(p)).kind != VerdictKind::Composite,
                    "Mersenne: p must be prime, got " + std::to_string(p));
            Partition part = Partition::make({{Natural(2), unsigned(p)}}, {}, "Mersenne");
            return finish(std::move(part), Sign::Minus,
                          pow_natural(Natural(2), unsigned(p)) - 1);
        });

    add({"Fermat", "2^(2^n) + 1", "2^(2^n) + 1", "R+, A={2^(2^n)}, B={1}",
         "source table prints the minus sign; that variant is composite for every "
         "n >= 1, so the classical plus form is implemented",
         {{"n", 0, 8, ""}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            const unsigned e = 1u << unsigned(n);
            Partition part = Partition::make({{Natural(2), e}}, {}, "Fermat");
            return finish(std::move(part), Sign::Plus, pow_natural(Natural(2), e) + 1);
        });

    add({"Double Mersenne", "2^(2^p - 1) - 1", "2^(2^p - 1) - 1",
         "R-, A={2^(2^p - 1)}, B={1}, p prime",
         "source table prints exponent 2^(p-1); the classical exponent is the Mersenne "
         "number 2^p - 1 (the printed variant is already composite at p=3)",
         {{"p", 2, 7, "prime"}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long p = get_param(meta, params, "p");
            require(is_prime(Natural(p)).kind != VerdictKind::Composite,
                    "Double Mersenne: p must be prime, got " + std::to_string(p));
            const unsigned e = (1u << unsigned(p)) - 1;
            Partition part = Partition::make({{Natural(2), e}}, {}, "Double Mersenne");
            return finish(std::move(part), Sign::Minus, pow_natural(Natural(2), e) - 1);
        });

    add({"Euclid", "p_n# + 1", "primorial(k) + 1", "R+, A = first k primes, B={1}",
         "", {{"k", 1, 100, ""}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long k = get_param(meta, params, "k");
            Partition part = Partition::make(prime_prefix_side(unsigned(k)), {}, "Euclid");
            return finish(std::move(part), Sign::Plus, primorial(unsigned(k)) + 1);
        });

    add({"Primorial", "p_n# +- 1", "primorial(k) +- 1", "R, A = first k primes, B={1}",
         "", {{"k", 1, 100, ""}, {"sign", 0, 1, "0 = minus, 1 = plus"}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long k = get_param(meta, params, "k");
            const Sign sign = get_param(meta, params, "sign") ? Sign::Plus : Sign::Minus;
            Partition part = Partition::make(prime_prefix_side(unsigned(k)), {}, "Primorial");
            const Natural prod = primorial(unsigned(k));
            return finish(std::move(part), sign, sign == Sign::Plus ? Natural(prod + 1) : Natural(prod - 1));
        });

    add({"Cullen", "n * 2^n + 1", "n * 2^n + 1", "R+, A = factors of n * 2^n, B={1}",
         "", {{"n", 1, 512, ""}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            std::vector<PrimePower> a = factor_u64(std::uint64_t(n));
            merge_power(a, {Natural(2), unsigned(n)});
            Partition part = Partition::make(std::move(a), {}, "Cullen");
            return finish(std::move(part), Sign::Plus,
                          Natural(n) * pow_natural(Natural(2), unsigned(n)) + 1);
        });

    add({"Woodall", "n * 2^n - 1", "n * 2^n - 1", "R-, A = factors of n * 2^n, B={1}",
         "", {{"n", 1, 512, ""}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            std::vector<PrimePower> a = factor_u64(std::uint64_t(n));
            merge_power(a, {Natural(2), unsigned(n)});
            Partition part = Partition::make(std::move(a), {}, "Woodall");
            return finish(std::move(part), Sign::Minus,
                          Natural(n) * pow_natural(Natural(2), unsigned(n)) - 1);
        });

    add({"Pythagorean", "4n + 1", "2^2 * n + 1", "R+, A = factors of 4n, B={1}",
         "", {{"n", 1, 1000000000, ""}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            Partition part =
                Partition::make(factor_u64(4 * std::uint64_t(n)), {}, "Pythagorean");
            return finish(std::move(part), Sign::Plus, Natural(4) * n + 1);
        });

    add({"Gaussian", "4n + 3", "2^2 * n + 3", "R+, A = factors of 4n, B={3}",
         "n divisible by 3 is rejected: the offset prime 3 occupies side B",
         {{"n", 1, 1000000000, "not divisible by 3"}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            require(n % 3 != 0, "Gaussian: n must not be divisible by 3");
            Partition part = Partition::make(factor_u64(4 * std::uint64_t(n)),
                                             {{Natural(3), 1}}, "Gaussian");
            return finish(std::move(part), Sign::Plus, Natural(4) * n + 3);
        });

    add({"Thabit", "3 * 2^n - 1", "3 * 2^n - 1", "R-, A={2^n, 3}, B={1}",
         "", {{"n", 1, 512, ""}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            Partition part = Partition::make({{Natural(2), unsigned(n)}, {Natural(3), 1}},
                                             {}, "Thabit");
            return finish(std::move(part), Sign::Minus,
                          Natural(3) * pow_natural(Natural(2), unsigned(n)) - 1);
        });

    add({"Pierpont", "2^u * 3^v + 1", "2^u * 3^v + 1", "R+, A={2^u, 3^v}, B={1}",
         "", {{"u", 1, 64, ""}, {"v", 1, 64, ""}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long u = get_param(meta, params, "u");
            const long long v = get_param(meta, params, "v");
            Partition part = Partition::make(
                {{Natural(2), unsigned(u)}, {Natural(3), unsigned(v)}}, {}, "Pierpont");
            return finish(std::move(part), Sign::Plus,
                          pow_natural(Natural(2), unsigned(u)) *
                                  pow_natural(Natural(3), unsigned(v)) +
                              1);
        });

    add({"Centered square", "n^2 + (n+1)^2", "2n(n+1) + 1",
         "R+, A = factors of 2n(n+1), B={1}", "", {{"n", 1, 1000000, ""}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            Partition part = Partition::make(
                factor_u64(2 * std::uint64_t(n) * (std::uint64_t(n) + 1)), {},
                "Centered square");
            return finish(std::move(part), Sign::Plus, Natural(2) * n * (n + 1) + 1);
        });

    add({"Centered decagonal", "5(n^2 - n) + 1", "5n(n-1) + 1",
         "R+, A = factors of 5n(n-1), B={1}", "", {{"n", 2, 1000000, ""}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            Partition part = Partition::make(
                factor_u64(5 * std::uint64_t(n) * (std::uint64_t(n) - 1)), {},
                "Centered decagonal");
            return finish(std::move(part), Sign::Plus, Natural(5) * n * (n - 1) + 1);
        });

    add({"Centered heptagonal", "(7n^2 - 7n + 2) / 2", "7n(n-1)/2 + 1",
         "R+, A = factors of 7n(n-1)/2, B={1}", "", {{"n", 2, 1000000, ""}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            const std::uint64_t prod = 7 * std::uint64_t(n) * (std::uint64_t(n) - 1) / 2;
            Partition part = Partition::make(factor_u64(prod), {}, "Centered heptagonal");
            return finish(std::move(part), Sign::Plus, Natural(prod) + 1);
        });

    add({"Centered triangular", "(3n^2 + 3n + 2) / 2", "3n(n+1)/2 + 1",
         "R+, A = factors of 3n(n+1)/2, B={1}", "", {{"n", 1, 1000000, ""}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            const std::uint64_t prod = 3 * std::uint64_t(n) * (std::uint64_t(n) + 1) / 2;
            Partition part = Partition::make(factor_u64(prod), {}, "Centered triangular");
            return finish(std::move(part), Sign::Plus, Natural(prod) + 1);
        });

    add({"Star", "6n(n-1) + 1", "2 * 3 * n(n-1) + 1", "R+, A = factors of 6n(n-1), B={1}",
         "", {{"n", 2, 1000000, ""}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            Partition part = Partition::make(
                factor_u64(6 * std::uint64_t(n) * (std::uint64_t(n) - 1)), {}, "Star");
            return finish(std::move(part), Sign::Plus, Natural(6) * n * (n - 1) + 1);
        });

    add({"Cuban I", "(m^3 - n^3)/(m - n), m = n+1", "3n(n+1) + 1",
         "R+, A = factors of 3n(n+1), B={1}", "", {{"n", 1, 1000000, ""}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            Partition part = Partition::make(
                factor_u64(3 * std::uint64_t(n) * (std::uint64_t(n) + 1)), {}, "Cuban I");
            return finish(std::move(part), Sign::Plus, Natural(3) * n * (n + 1) + 1);
        });

    add({"Cuban II", "(m^3 - n^3)/(m - n), m = n+2", "3n(n+2) + 2^2",
         "R+, A = factors of 3n(n+2), B={2^2}",
         "n must be odd so the factor 2 stays out of side A",
         {{"n", 1, 1000000, "odd"}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            require(n % 2 == 1, "Cuban II: n must be odd");
            Partition part =
                Partition::make(factor_u64(3 * std::uint64_t(n) * (std::uint64_t(n) + 2)),
                                {{Natural(2), 2}}, "Cuban II");
            return finish(std::move(part), Sign::Plus, Natural(3) * n * (n + 2) + 4);
        });

    add({"Proth", "k * 2^n + 1, odd k < 2^n", "k * 2^n + 1",
         "R+, A = factors of k * 2^n, B={1}",
         "criteria row in the source lists n itself as a multiplicand; the built "
         "product is k * 2^n",
         {{"k", 1, 1 << 20, "odd, k < 2^n"}, {"n", 1, 64, ""}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long k = get_param(meta, params, "k");
            const long long n = get_param(meta, params, "n");
            require(k % 2 == 1, "Proth: k must be odd");
            require(n >= 63 || k < (1LL << n), "Proth: k must be < 2^n");
            std::vector<PrimePower> a = factor_u64(std::uint64_t(k));
            merge_power(a, {Natural(2), unsigned(n)});
            Partition part = Partition::make(std::move(a), {}, "Proth");
            return finish(std::move(part), Sign::Plus,
                          Natural(k) * pow_natural(Natural(2), unsigned(n)) + 1);
        });

    add({"Leyland", "m^n + n^m", "m^n + n^m", "R+, A = factors of m^n, B = factors of n^m",
         "m and n must be coprime so the two sides stay disjoint",
         {{"m", 2, 64, "coprime with n"}, {"n", 2, 64, "coprime with m"}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long m = get_param(meta, params, "m");
            const long long n = get_param(meta, params, "n");
            require(std::gcd(m, n) == 1, "Leyland: m and n must be coprime");
            Partition part = Partition::make(factor_u64(std::uint64_t(m), unsigned(n)),
                                             factor_u64(std::uint64_t(n), unsigned(m)),
                                             "Leyland");
            return finish(std::move(part), Sign::Plus,
                          pow_natural(Natural(m), unsigned(n)) +
                              pow_natural(Natural(n), unsigned(m)));
        });

    add({"Quartan", "x^4 + y^4", "x^4 + y^4", "R+, A = factors of x^4, B = factors of y^4",
         "x and y must be coprime and not both 1",
         {{"x", 1, 1000000, "coprime with y"}, {"y", 1, 1000000, "coprime with x"}},
         false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long x = get_param(meta, params, "x");
            const long long y = get_param(meta, params, "y");
            require(std::gcd(x, y) == 1, "Quartan: x and y must be coprime");
            require(x != 1 || y != 1, "Quartan: x and y cannot both be 1");
            Partition part = Partition::make(factor_u64(std::uint64_t(x), 4),
                                             factor_u64(std::uint64_t(y), 4), "Quartan");
            return finish(std::move(part), Sign::Plus,
                          pow_natural(Natural(x), 4) + pow_natural(Natural(y), 4));
        });

    add({"n^4 + 1", "n^4 + 1", "n^4 + 1", "R+, A = factors of n^4, B={1}",
         "", {{"n", 2, 1000000, ""}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            Partition part = Partition::make(factor_u64(std::uint64_t(n), 4), {}, "n^4 + 1");
            return finish(std::move(part), Sign::Plus, pow_natural(Natural(n), 4) + 1);
        });

    add({"Solinas", "2^a +- 2^b +- 1", "2^a +- (2^b +- 1)", "R, A={2^a}, B={2^b +- 1}",
         "side B's multiplicand 2^b +- 1 is usually composite, making instances "
         "generalized; the inner sign picks it, the outer sign picks the resultant",
         {{"a", 2, 256, "a > b"},
          {"b", 1, 255, ""},
          {"inner", 0, 1, "0: 2^b - 1 (needs b >= 2), 1: 2^b + 1"},
          {"sign", 0, 1, "0 = minus, 1 = plus"}},
         true, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long a = get_param(meta, params, "a");
            const long long b = get_param(meta, params, "b");
            const bool inner_plus = get_param(meta, params, "inner") != 0;
            const Sign sign = get_param(meta, params, "sign") ? Sign::Plus : Sign::Minus;
            require(a > b, "Solinas: a must exceed b");
            require(inner_plus || b >= 2, "Solinas: 2^b - 1 needs b >= 2");
            const Natural m = inner_plus ? pow_natural(Natural(2), unsigned(b)) + 1
                                         : pow_natural(Natural(2), unsigned(b)) - 1;
            Partition part = make_auto({{Natural(2), unsigned(a)}}, {{m, 1}}, "Solinas");
            const Natural big = pow_natural(Natural(2), unsigned(a));
            return finish(std::move(part), sign, sign == Sign::Plus ? Natural(big + m) : Natural(big - m));
        });

    add({"Kynea", "(2^n + 1)^2 - 2", "(2^n + 1)^2 - 2", "R-, A={(2^n + 1)^2}, B={2}",
         "the multiplicand 2^n + 1 is composite for most n, making those instances "
         "generalized",
         {{"n", 1, 64, ""}}, true, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            const Natural base = pow_natural(Natural(2), unsigned(n)) + 1;
            Partition part = make_auto({{base, 2}}, {{Natural(2), 1}}, "Kynea");
            return finish(std::move(part), Sign::Minus, base * base - 2);
        });

    add({"Carol", "(2^n - 1)^2 - 2", "(2^n - 1)^2 - 2", "R-, A={(2^n - 1)^2}, B={2}",
         "sign column in the source prints R+; the printed values require the minus "
         "resultant. The multiplicand 2^n - 1 is composite for composite n, making "
         "those instances generalized",
         {{"n", 2, 64, ""}}, true, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            const Natural base = pow_natural(Natural(2), unsigned(n)) - 1;
            Partition part = make_auto({{base, 2}}, {{Natural(2), 1}}, "Carol");
            return finish(std::move(part), Sign::Minus, base * base - 2);
        });

    add({"Generalized Fermat base 10", "10^n + 1", "2^n * 5^n + 1",
         "R+, A={2^n, 5^n}, B={1}", "", {{"n", 1, 64, ""}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            Partition part = Partition::make(
                {{Natural(2), unsigned(n)}, {Natural(5), unsigned(n)}}, {},
                "Generalized Fermat base 10");
            return finish(std::move(part), Sign::Plus,
                          pow_natural(Natural(10), unsigned(n)) + 1);
        });

    add({"Eisenstein", "3n - 1", "3n - 1", "R-, A = factors of 3n, B={1}",
         "the real-integer Eisenstein family without imaginary part",
         {{"n", 1, 1000000000, ""}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            Partition part =
                Partition::make(factor_u64(3 * std::uint64_t(n)), {}, "Eisenstein");
            return finish(std::move(part), Sign::Minus, Natural(3) * n - 1);
        });

    add({"Odd", "2n - 1", "2n - 1", "R-, A = factors of 2n, B={1}",
         "", {{"n", 1, 1000000000, ""}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            Partition part = Partition::make(factor_u64(2 * std::uint64_t(n)), {}, "Odd");
            return finish(std::move(part), Sign::Minus, Natural(2) * n - 1);
        });

    add({"Factorial", "n! +- 1", "n! +- 1", "R, A = merged prime factors of n!, B={1}",
         "", {{"n", 2, 40, ""}, {"sign", 0, 1, "0 = minus, 1 = plus"}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            const Sign sign = get_param(meta, params, "sign") ? Sign::Plus : Sign::Minus;
            std::vector<PrimePower> a;
            Natural value = 1;
            for (long long t = 2; t <= n; ++t) {
                merge_factors(a, factor_u64(std::uint64_t(t)));
                value *= t;
            }
            Partition part = Partition::make(std::move(a), {}, "Factorial");
            return finish(std::move(part), sign, sign == Sign::Plus ? Natural(value + 1) : Natural(value - 1));
        });

    add({"Double factorial", "n!! +- 1", "n!! +- 1",
         "R, A = merged prime factors of n!!, B={1}", "",
         {{"n", 2, 40, ""}, {"sign", 0, 1, "0 = minus, 1 = plus"}}, false, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long n = get_param(meta, params, "n");
            const Sign sign = get_param(meta, params, "sign") ? Sign::Plus : Sign::Minus;
            std::vector<PrimePower> a;
            Natural value = 1;
            for (long long t = n; t >= 2; t -= 2) {
                merge_factors(a, factor_u64(std::uint64_t(t)));
                value *= t;
            }
            Partition part = Partition::make(std::move(a), {}, "Double factorial");
            return finish(std::move(part), sign, sign == Sign::Plus ? Natural(value + 1) : Natural(value - 1));
        });

    add({"Fibonacci", "p_n# + P_m", "primorial(k-1) + p_k",
         "R+, A = first k-1 primes, B = {p_k}",
         "transcribed as printed in the source table (primorial prefix plus the largest "
         "prime); this is not the classical Fibonacci-prime definition, so the form is "
         "kept out of verification suites",
         {{"k", 1, 50, ""}}, false, false},
        [](const CategoryForm& meta, const Params& params) {
            const long long k = get_param(meta, params, "k");
            const std::vector<std::uint64_t> primes = first_n_primes(unsigned(k));
            std::vector<PrimePower> a = prime_prefix_side(unsigned(k) - 1);
            std::vector<PrimePower> b{{Natural(primes.back()), 1}};
            Partition part = Partition::make(std::move(a), std::move(b), "Fibonacci");
            return finish(std::move(part), Sign::Plus,
                          primorial(unsigned(k) - 1) + primes.back());
        });

    add({"Palindromic wing", "a(10^m - 1)/9 +- b*10^(m/2)", "repunit wing +- scaled middle",
         "R, A={a(10^m - 1)/9}, B={b, 10^(m/2)}",
         "both sides use composite multiplicands, so instances are generalized",
         {{"a", 1, 9, ""},
          {"b", 1, 9, ""},
          {"m", 2, 12, "even"},
          {"sign", 0, 1, "0 = minus, 1 = plus"}},
         true, true},
        [](const CategoryForm& meta, const Params& params) {
            const long long a = get_param(meta, params, "a");
            const long long b = get_param(meta, params, "b");
            const long long m = get_param(meta, params, "m");
            const Sign sign = get_param(meta, params, "sign") ? Sign::Plus : Sign::Minus;
            require(m % 2 == 0, "Palindromic wing: m must be even");
            const Natural wing = Natural(a) * (pow_natural(Natural(10), unsigned(m)) - 1) / 9;
            const Natural mid_pow = pow_natural(Natural(10), unsigned(m / 2));
            std::vector<PrimePower> side_b{{mid_pow, 1}};
            if (b > 1) side_b.push_back({Natural(b), 1});
            Partition part = make_auto({{wing, 1}}, std::move(side_b), "Palindromic wing");
            const Natural mid = Natural(b) * mid_pow;
            const Natural value = sign == Sign::Plus
                                      ? Natural(wing + mid)
                                      : (wing >= mid ? Natural(wing - mid)
                                                     : Natural(mid - wing));
            return finish(std::move(part), sign, value);
        });

    return reg;
}

const std::vector<FormImpl>& registry() {
    static const std::vector<FormImpl> reg = build_registry();
    return reg;
}

const FormImpl& find_impl(std::string_view name) {
    const std::string key = normalize(name);
    for (const FormImpl& form : registry()) {
        if (normalize(form.meta.name) == key) return form;
    }
    throw DomainError("unknown category: " + std::string(name));
}

}  // namespace

const std::vector<CategoryForm>& list_categories() {
    static const std::vector<CategoryForm> metas = [] {
        std::vector<CategoryForm> out;
        out.reserve(registry().size());
        for (const FormImpl& form : registry()) out.push_back(form.meta);
        return out;
    }();
    return metas;
}

const CategoryForm& find_category(std::string_view name) { return find_impl(name).meta; }

Instantiation instantiate(std::string_view name, const Params& params) {
    const FormImpl& form = find_impl(name);
    check_param_names(form.meta, params);
    return form.build(form.meta, params);
}

VerifyResult verify_category(std::string_view name, const Params& params) {
    Instantiation inst = instantiate(name, params);
    PrimalityVerdict verdict = is_prime(inst.value);
    return VerifyResult{std::move(inst), verdict};
}

ConstellationSpec twin_spec() { return {"twin", {-1, 1}, "", false}; }

ConstellationSpec sexy_spec() { return {"sexy", {-3, 3}, "", false}; }

ConstellationSpec triplet_p2_p6_spec() {
    return {"triplet (p, p+2, p+6)",
            {-3, -1, 3},
            "source rule: at least one resultant divisible by 3 (reading ambiguous, "
            "exposed as the optional require_div3 filter)",
            false};
}

ConstellationSpec triplet_p4_p6_spec() {
    return {"triplet (p, p+4, p+6)",
            {-3, 1, 3},
            "source rule: at least one resultant divisible by 3 (reading ambiguous, "
            "exposed as the optional require_div3 filter)",
            false};
}

ConstellationSpec quadruplet_spec() {
    return {"quadruplet (p, p+2, p+6, p+8)",
            {-5, -3, 1, 3},
            "source rule: at least one resultant divisible by 3 (reading ambiguous, "
            "exposed as the optional require_div3 filter)",
            false};
}

std::vector<ConstellationHit> constellation_search(unsigned core_primes,
                                                   const ConstellationSpec& spec,
                                                   unsigned exponent) {
    if (core_primes < 1 || core_primes > 24) {
        throw CapacityError("constellation search supports 1..24 core primes");
    }
    if (exponent < 1) throw DomainError("exponent must be >= 1");
    if (spec.offsets.empty()) throw DomainError("offset list is empty");
    {
        std::vector<long long> sorted = spec.offsets;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw DomainError("offsets must be distinct");
        }
    }

    const std::vector<std::uint64_t> primes = first_n_primes(core_primes);
    // Primes dividing any offset play the role of side B and may not appear
    // in the subset.
    std::vector<std::uint64_t> forbidden;
    for (long long o : spec.offsets) {
        for (const PrimePower& pp : factor_u64(std::uint64_t(o < 0 ? -o : o))) {
            forbidden.push_back(static_cast<std::uint64_t>(pp.base));
        }
    }

    std::vector<ConstellationHit> hits;
    const std::uint64_t total = std::uint64_t(1) << core_primes;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        bool skip = false;
        Natural prod = 1;
        for (unsigned i = 0; i < core_primes; ++i) {
            if (!((mask >> i) & 1u)) continue;
            if (std::find(forbidden.begin(), forbidden.end(), primes[i]) !=
                forbidden.end()) {
                skip = true;
                break;
            }
            prod *= pow_natural(Natural(primes[i]), exponent);
        }
        if (skip) continue;

        std::vector<Natural> values;
        bool all_prime = true;
        bool any_div3 = false;
        for (long long o : spec.offsets) {
            Natural candidate =
                o >= 0 ? Natural(prod + o)
                       : (prod >= -o ? Natural(prod - (-o)) : Natural(Natural(-o) - prod));
            if (candidate % 3 == 0) any_div3 = true;
            if (candidate < 2 || is_prime(candidate).kind == VerdictKind::Composite) {
                all_prime = false;
                break;
            }
            values.push_back(std::move(candidate));
        }
        if (!all_prime) continue;
        if (spec.require_div3 && !any_div3) continue;

        std::sort(values.begin(), values.end());
        std::string subset;
        for (unsigned i = 0; i < core_primes; ++i) {
            if (!((mask >> i) & 1u)) continue;
            if (!subset.empty()) subset += '*';
            subset += std::to_string(primes[i]);
        }
        hits.push_back({std::move(prod), std::move(values), std::move(subset)});
    }
    std::sort(hits.begin(), hits.end(),
              [](const ConstellationHit& x, const ConstellationHit& y) {
                  return x.product < y.product;
              });
    return hits;
}

}  // namespace facelim
