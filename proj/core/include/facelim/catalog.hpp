#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "facelim/fe.hpp"
#include "facelim/partition.hpp"
#include "facelim/primality.hpp"

namespace facelim {

using Params = std::map<std::string, long long>;

struct ParamSpec {
    std::string name;
    long long min_value = 0;
    long long max_value = 0;
    std::string constraint;  // extra rule enforced by the builder ("prime", "odd", ...)
};

struct Instantiation {
    Partition partition;
    Sign sign = Sign::Plus;
    Natural value;
};

// One row of the prime-family catalog: a named template that maps small
// integer parameters to a partition and a sign whose resultant equals the
// closed form. Forms whose multiplicands are composite (Carol, Kynea,
// Solinas, Palindromic wing) mark instances generalized; the coprimality
// guarantee is not asserted for those.
struct CategoryForm {
    std::string name;
    std::string initial_form;
    std::string simplified_form;
    std::string criteria;  // partition structure, e.g. "R-, A={2^p}, B={1}"
    std::string notes;     // errata in the source table, non-standard definitions
    std::vector<ParamSpec> params;
    bool may_generalize = false;
    bool in_acceptance = true;
};

const std::vector<CategoryForm>& list_categories();

// Case-insensitive lookup; throws DomainError for unknown names.
const CategoryForm& find_category(std::string_view name);

// Builds the partition and closed-form value; throws DomainError for unknown
// category or out-of-bounds parameters. The construction is cross-checked:
// evaluating the partition must reproduce the closed form exactly.
Instantiation instantiate(std::string_view name, const Params& params);

struct VerifyResult {
    Instantiation instance;
    PrimalityVerdict verdict;
};
VerifyResult verify_category(std::string_view name, const Params& params);

// Constellation search over subset products of the first L primes.
struct ConstellationSpec {
    std::string name;
    std::vector<long long> offsets;  // the y values, signed
    std::string rule;                // side-condition text, informational
    bool require_div3 = false;       // literal reading of the div-3 side rule;
                                     // kept optional because a hit's members
                                     // are prime, so it only admits the value 3
};

ConstellationSpec twin_spec();          // |prod - 1|, prod + 1
ConstellationSpec sexy_spec();          // |prod - 3|, prod + 3
ConstellationSpec triplet_p2_p6_spec(); // (p, p+2, p+6) as prod-3, prod-1, prod+3
ConstellationSpec triplet_p4_p6_spec(); // (p, p+4, p+6) as prod-3, prod+1, prod+3
ConstellationSpec quadruplet_spec();    // (p, p+2, p+6, p+8)

struct ConstellationHit {
    Natural product;
    std::vector<Natural> values;  // ascending, all prime
    std::string subset;           // e.g. "2*3*5"
};

// Enumerates every non-empty subset of the first core_primes primes, raises
// each member to `exponent`, and keeps subsets where |product + offset| is
// prime for every offset. Subsets containing a prime factor of an offset are
// skipped (the offset occupies side B). Hits are sorted by product.
std::vector<ConstellationHit> constellation_search(unsigned core_primes,
                                                   const ConstellationSpec& spec,
                                                   unsigned exponent = 1);

}  // namespace facelim
