#pragma once

#include <string>
#include <vector>

#include "palcf/bignum.hpp"

namespace palcf {

/// Eventually periodic continued fraction
///
///     [p0, p1, ..., pr; {c0, c1, ..., cL}]
///
/// meaning the partial-quotient stream p0, p1, ..., pr, c0, ..., cL, c0, ...
/// Canonical form: the period is primitive (not a repetition of a shorter
/// block) and no preperiod tail entry can be absorbed into the period by
/// rotation. Period entries are >= 1, preperiod entries after the first are
/// >= 1, the first preperiod entry may be any integer. An empty preperiod
/// denotes a purely periodic expansion.
struct CFExpansion {
    std::vector<Int> preperiod;
    std::vector<Int> period;

    bool operator==(const CFExpansion&) const = default;
};

// Validates entries and returns the canonical form.
CFExpansion make_cf(std::vector<Int> preperiod, std::vector<Int> period);

// Reduce the period to its primitive block and absorb preperiod tail entries
// that merely repeat the period.
void normalize_cf(CFExpansion& cf);

// Partial quotient at stream position i (preperiod first, then the period
// cycling forever).
const Int& cf_term(const CFExpansion& cf, std::size_t i);

std::string format_cf(const CFExpansion& cf);

}  // namespace palcf
