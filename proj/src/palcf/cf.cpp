#include "palcf/cf.hpp"

#include <sstream>

namespace palcf {

void normalize_cf(CFExpansion& cf) {
    auto& per = cf.period;
    std::size_t L = per.size();
    if (L == 0) return;

    // Primitive block via the classic failure function.
    std::vector<std::size_t> fail(L, 0);
    for (std::size_t i = 1; i < L; ++i) {
        std::size_t j = fail[i - 1];
        while (j > 0 && per[i] != per[j]) j = fail[j - 1];
        if (per[i] == per[j]) ++j;
        fail[i] = j;
    }
    std::size_t d = L - fail[L - 1];
    if (d < L && L % d == 0) per.resize(d);

    // Absorb preperiod entries equal to the period's last element: the stream
    // is unchanged if the period is rotated right underneath them.
    while (!cf.preperiod.empty() && cf.preperiod.back() == cf.period.back()) {
        cf.preperiod.pop_back();
        cf.period.insert(cf.period.begin(), cf.period.back());
        cf.period.pop_back();
    }
}

CFExpansion make_cf(std::vector<Int> preperiod, std::vector<Int> period) {
    check(!period.empty(), Errc::domain, "continued fraction needs a nonempty period");
    for (const Int& c : period)
        check(c >= 1, Errc::domain, "period entries must be positive");
    for (std::size_t i = 1; i < preperiod.size(); ++i)
        check(preperiod[i] >= 1, Errc::domain,
              "preperiod entries after the first must be positive");
    CFExpansion cf{std::move(preperiod), std::move(period)};
    normalize_cf(cf);
    return cf;
}

const Int& cf_term(const CFExpansion& cf, std::size_t i) {
    if (i < cf.preperiod.size()) return cf.preperiod[i];
    return cf.period[(i - cf.preperiod.size()) % cf.period.size()];
}

std::string format_cf(const CFExpansion& cf) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < cf.preperiod.size(); ++i) {
        if (i) out << ", ";
        out << cf.preperiod[i];
    }
    if (!cf.preperiod.empty()) out << "; ";
    out << '{';
    for (std::size_t i = 0; i < cf.period.size(); ++i) {
        if (i) out << ", ";
        out << cf.period[i];
    }
    out << "}]";
    return out.str();
}

}  // namespace palcf
