// Gate binary: one line per criterion, nonzero exit when any fails.
// Everything here is checked exactly (integer equality, no tolerances).

#include <cstddef>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "palcf/fibpoly.hpp"
#include "palcf/palindrome.hpp"
#include "palcf/pell.hpp"
#include "palcf/raney.hpp"
#include "palcf/surd.hpp"

namespace {

using namespace palcf;

std::string why;

#define NEED(cond, msg)     \
    do {                    \
        if (!(cond)) {      \
            why = (msg);    \
            return false;   \
        }                   \
    } while (0)

std::vector<Int> word_of(std::initializer_list<long long> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

// construct((2,5,5,2), -11): s = 107, t = -49, alpha = (-107+sqrt(11645))/2,
// expansion [0; {2,5,5,2,107}]; s = 74 is not in the admissible class.
bool prescribed_period_example() {
    Palindrome pal = make_palindrome(word_of({2, 5, 5, 2}));
    ConstructionResult r = construct(pal, -11, 0);
    NEED(r.s == 107, "s != 107");
    NEED(r.t == -49, "t != -49");
    NEED(r.alpha == make_surd(-107, 2, 11645), "alpha != (-107+sqrt(11645))/2");
    CFExpansion cf = expand(r.alpha);
    NEED(cf.preperiod == word_of({0}), "preperiod != [0]");
    NEED(cf.period == word_of({2, 5, 5, 2, 107}), "period != {2,5,5,2,107}");
    NEED(!is_algebraic_integer(pal, 74), "s=74 wrongly admitted");
    return true;
}

// construct((2,1,1,2,1,1,2), 5): s = 28, alpha = -14+sqrt(207) (so t = -11),
// expansion [0; {2,1,1,2,1,1,2,28}].
bool seven_letter_example() {
    Palindrome pal = make_palindrome(word_of({2, 1, 1, 2, 1, 1, 2}));
    ConstructionResult r = construct(pal, 5, 0);
    NEED(r.s == 28, "s != 28");
    NEED(r.alpha == make_surd(-14, 1, 207), "alpha != -14+sqrt(207)");
    NEED(r.t == -11, "t inconsistent with alpha = -14+sqrt(207)");
    CFExpansion cf = expand(r.alpha);
    NEED(cf.preperiod == word_of({0}), "preperiod != [0]");
    NEED(cf.period == word_of({2, 1, 1, 2, 1, 1, 2, 28}),
         "period != {2,1,1,2,1,1,2,28}");
    return true;
}

// (1,1,2m,1,1) at k = m+2: s = 6m+2, t = -(3m+2), period length 6; the four
// listed surds all occur in the m <= 5 window.
bool five_letter_family() {
    const QuadraticSurd listed[] = {make_surd(-4, 1, 21), make_surd(-7, 1, 57),
                                    make_surd(-13, 1, 183),
                                    make_surd(-16, 1, 273)};
    std::size_t hits = 0;
    for (long long m = 1; m <= 5; ++m) {
        std::string at = " at m=" + std::to_string(m);
        Palindrome pal = make_palindrome(word_of({1, 1, 2 * m, 1, 1}));
        ConstructionResult r = construct(pal, m + 2, 0);
        NEED(r.s == 6 * m + 2, "s != 6m+2" + at);
        NEED(r.t == -3 * m - 2, "t != -(3m+2)" + at);
        ConstructionCheck chk = check_construction(r);
        NEED(chk.matches, "expansion mismatch" + at);
        NEED(!chk.collapsed && chk.expansion.period.size() == 6,
             "period length != 6" + at);
        for (const QuadraticSurd& v : listed)
            if (r.alpha == v) ++hits;
    }
    NEED(hits == 4, "a listed surd was not reproduced");
    return true;
}

// (1,1,2m+1,1,1) at k = k_min = m+2: s = 2m+1 and the period collapses to
// the repetition of (1,1,2m+1), i.e. length 3 (length 1 at m = 0, where the
// block itself is a repetition).
bool period_collapse() {
    for (long long m = 0; m <= 4; ++m) {
        std::string at = " at m=" + std::to_string(m);
        Palindrome pal = make_palindrome(word_of({1, 1, 2 * m + 1, 1, 1}));
        NEED(k_min(pal) == m + 2, "k_min != m+2" + at);
        ConstructionResult r = construct(pal, k_min(pal), 0);
        NEED(r.s == 2 * m + 1, "s != 2m+1" + at);
        ConstructionCheck chk = check_construction(r);
        NEED(chk.matches, "expansion mismatch" + at);
        NEED(chk.collapsed, "period did not collapse" + at);
        CFExpansion block =
            make_cf({surd_floor(r.alpha)}, word_of({1, 1, 2 * m + 1}));
        NEED(eval_periodic(block) == r.alpha,
             "alpha != [a0; {1,1,2m+1}]" + at);
        CFExpansion direct = expand(r.alpha);
        if (m == 0)
            NEED(direct.period == word_of({1}), "period != {1}" + at);
        else
            NEED(direct.period == word_of({1, 1, 2 * m + 1}),
                 "period != {1,1,2m+1}" + at);
        NEED(direct.period.size() < 6, "period not shorter than 6" + at);
    }
    return true;
}

// beta(2, 2x, 2) for x = 1..5 and x = 50: the fixed table of expansions,
// every period of length 6, the last D equal to 4*101022802.
bool sleeper_table() {
    struct Row {
        long long m;
        const char* d;
        const char* cf;
    };
    const Row rows[] = {
        {2, "164", "[12; {1, 4, 6, 4, 1, 24}]"},
        {4, "1480", "[38; {2, 8, 19, 8, 2, 76}]"},
        {6, "6452", "[80; {3, 12, 40, 12, 3, 160}]"},
        {8, "19112", "[138; {4, 16, 69, 16, 4, 276}]"},
        {10, "45028", "[212; {5, 20, 106, 20, 5, 424}]"},
        {100, "404091208", "[20102; {50, 200, 10051, 200, 50, 40204}]"},
    };
    for (const Row& row : rows) {
        std::string at = " at m=" + std::to_string(row.m);
        BetaResult b = beta(2, row.m, 2);
        NEED(b.d == Int(row.d), "D mismatch" + at);
        NEED(format_cf(b.cf) == row.cf, "expansion mismatch" + at);
        NEED(b.cf.period.size() == 6, "period length != 6" + at);
        NEED(b.cf == expand(make_surd(0, 1, b.d)), "not sqrt(D)" + at);
    }
    NEED(beta(2, 100, 2).d == 4 * Int(101022802), "D != 4*101022802");
    return true;
}

// Closed forms against direct expansion on the even-m grid, with the period
// length each branch promises.
bool closed_forms_vs_expansion() {
    for (long long m : {2LL, 4LL, 6LL}) {
        for (long long n = 1; n <= 6; ++n) {
            Int bound = fib_k_min(n, m);
            for (Int k = bound; k <= bound + 5; ++k) {
                std::string at = " at n=" + std::to_string(n) +
                                 " m=" + std::to_string(m) + " k=" + k.str();
                BetaResult b = beta(n, m, k);
                NEED(b.cf == expand(make_surd(0, 1, b.d)),
                     "closed form != expansion" + at);
                std::size_t len = b.cf.period.size();
                std::size_t nn = static_cast<std::size_t>(n);
                std::size_t want = 0;
                if (b.branch == "even-n-even-k")
                    want = 2 * nn + 2;
                else if (b.branch == "even-n-odd-k")
                    want = 5 * nn + 5;
                else if (b.branch == "even-n-odd-k-m2")
                    want = 3 * nn + 5;
                else if (b.branch == "odd-n")
                    want = nn + 1;
                NEED(want != 0, "unexpected branch " + b.branch + at);
                NEED(len == want, "period length != " + std::to_string(want) + at);
            }
        }
    }
    return true;
}

// 500 seeded purely periodic values in (0,1): the run-level doubling machine
// agrees with the direct expansion of the doubled value.
bool doubling_transducer() {
    std::mt19937_64 rng(20260816ULL);
    for (int i = 0; i < 500; ++i) {
        std::size_t len = 1 + static_cast<std::size_t>(rng() % 8);
        std::vector<Int> period;
        for (std::size_t j = 0; j < len; ++j)
            period.push_back(Int(1 + rng() % 9));
        CFExpansion cf = make_cf({0}, period);
        QuadraticSurd alpha = eval_periodic(cf);
        CFExpansion routed = word_to_cf(double_word(cf_to_word(cf)));
        NEED(routed == expand(doubled(alpha)),
             "transducer mismatch for " + format_cf(cf));
    }
    return true;
}

// Pell grid n <= 10, m <= 9, k over a window above the bound: the trace
// identity D f(n+1)^2 = T^2 +- 4, and the assembled fundamental solutions
// match the convergent-walk oracle exactly.
bool pell_identities() {
    for (long long n = 1; n <= 10; ++n) {
        for (long long mi = 1; mi <= 9; ++mi) {
            Int m = mi;
            Int bound = fib_k_min(n, m);
            for (Int k = bound; k <= bound + 5; ++k) {
                std::string at = " at n=" + std::to_string(n) +
                                 " m=" + std::to_string(mi) + " k=" + k.str();
                FibConstruction fc = fib_construct(n, m, k);
                Int d = fc.s * fc.s - 4 * fc.t;
                Int T = t_value(n, m, fc.s);
                Int f1 = fib(n + 1, m);
                Int rhs = T * T + (n % 2 == 0 ? 4 : -4);
                NEED(d * f1 * f1 == rhs, "trace identity fails" + at);

                if (n % 2 == 0 && !is_even(k)) {
                    PellResult neg = fundamental_negative(n, m, k);
                    NEED(neg.sol.x * neg.sol.x - neg.d * neg.sol.y * neg.sol.y ==
                             -1,
                         "negative norm equation fails" + at);
                    auto oracle = pell_oracle(neg.d, -1);
                    NEED(oracle && oracle->x == neg.sol.x &&
                             oracle->y == neg.sol.y,
                         "negative solution not minimal" + at);
                }
                PellResult pos = fundamental_positive(n, m, k);
                NEED(pos.sol.x * pos.sol.x - pos.d * pos.sol.y * pos.sol.y == 1,
                     "positive norm equation fails" + at);
                auto oracle = pell_oracle(pos.d, 1);
                NEED(oracle && oracle->x == pos.sol.x && oracle->y == pos.sol.y,
                     "positive solution not minimal" + at);
            }
        }
    }
    return true;
}

// Square-root admissibility against brute force: for every palindrome of
// length <= 4 with entries <= 4, the a0 <= 60 whose prescribed expansion
// evaluates to a pure root are exactly the admissible class members in that
// range; impossible words (both continuant parities odd) have no hits.
bool admissibility_scan() {
    std::vector<std::vector<Int>> words;
    for (long long a = 1; a <= 4; ++a) {
        words.push_back(word_of({a}));
        words.push_back(word_of({a, a}));
        for (long long b = 1; b <= 4; ++b) {
            words.push_back(word_of({a, b, a}));
            words.push_back(word_of({a, b, b, a}));
        }
    }
    NEED(words.size() == 40, "expected 40 palindromes");

    std::size_t words_with_hits = 0;
    for (const std::vector<Int>& w : words) {
        Palindrome pal = make_palindrome(w);
        std::string at = " for word " + format_cf(CFExpansion{{}, w});
        SqrtAdmissibility adm = sqrt_admissibility(pal);

        std::vector<Int> hits;
        for (Int a0 = 1; a0 <= 60; ++a0) {
            std::vector<Int> period = w;
            period.push_back(2 * a0);
            QuadraticSurd v = eval_periodic(make_cf({a0}, period));
            if (v.p == 0 && v.q > 0 && v.d % (v.q * v.q) == 0)
                hits.push_back(a0);
        }
        if (!hits.empty()) ++words_with_hits;

        if (!adm.possible) {
            NEED(hits.empty(), "inadmissible word has a hit" + at);
            Convergents cv = convergents(w);
            std::size_t nn = w.size();
            NEED(!is_even(cv.B[nn - 1]) && !is_even(cv.B[nn]),
                 "impossible verdict without odd parities" + at);
        } else {
            NEED(adm.a0_class.has_value(), "missing a0 class" + at);
            std::vector<Int> expected;
            for (Int a0 = 1; a0 <= 60; ++a0)
                if (mod_floor(a0 - adm.a0_class->value,
                              adm.a0_class->modulus) == 0)
                    expected.push_back(a0);
            NEED(hits == expected, "hit set != admissible class" + at);
        }
    }
    NEED(words_with_hits >= 20, "scan found implausibly few pure roots");
    return true;
}

// Identity battery (10^4 instances each), 10^3 round trips in both
// directions, and the unbounded-k window: every k above the bound gives a
// distinct verified algebraic integer.
bool invariant_battery() {
    std::mt19937_64 rng(424242ULL);
    auto draw = [&rng](long long lo, long long hi) {
        return Int(lo + static_cast<long long>(
                            rng() % static_cast<std::uint64_t>(hi - lo + 1)));
    };

    for (int i = 0; i < 10000; ++i) {
        std::size_t len = 1 + static_cast<std::size_t>(rng() % 10);
        std::vector<Int> word;
        for (std::size_t j = 0; j < len; ++j) word.push_back(draw(1, 30));
        Convergents cv = convergents(word);
        Int sign = len % 2 == 0 ? 1 : -1;
        NEED(cv.A[len] * cv.B[len - 1] - cv.B[len] * cv.A[len - 1] == sign,
             "determinant identity fails");
    }

    for (int i = 0; i < 10000; ++i) {
        std::size_t half = 1 + static_cast<std::size_t>(rng() % 5);
        bool middle = rng() % 2 == 0;
        std::vector<Int> word;
        for (std::size_t j = 0; j < half; ++j) word.push_back(draw(1, 30));
        if (middle) word.push_back(draw(1, 30));
        for (std::size_t j = half; j > 0; --j) word.push_back(word[j - 1]);
        Convergents cv = convergents(word);
        std::size_t nn = word.size();
        NEED(cv.A[nn - 1] == cv.B[nn], "mirror continuant identity fails");
    }

    for (int i = 0; i < 10000; ++i) {
        Int m = draw(1, 9);
        long long a = static_cast<long long>(rng() % 41) - 20;
        long long b = static_cast<long long>(rng() % 41) - 20;
        NEED(fib(a + b, m) ==
                 fib(b - 1, m) * fib(a, m) + fib(b, m) * fib(a + 1, m),
             "addition law fails");
    }

    for (int i = 0; i < 10000; ++i) {
        Int m = draw(1, 9);
        long long h = static_cast<long long>(rng() % 61) - 30;
        Int sign = h % 2 == 0 ? 1 : -1;
        NEED(fib(h + 1, m) * fib(h - 1, m) - fib(h, m) * fib(h, m) == sign,
             "Cassini identity fails");
    }

    for (int i = 0; i < 1000; ++i) {
        Int p = draw(-50, 50);
        Int q = draw(1, 20) * (rng() % 2 == 0 ? 1 : -1);
        Int d = draw(2, 5000);
        if (is_square(d)) continue;
        QuadraticSurd v = make_surd(p, q, d);
        NEED(eval_periodic(expand(v)) == v, "expand/eval round trip fails");
    }

    for (int i = 0; i < 1000; ++i) {
        std::vector<Int> pre, per;
        std::size_t plen = static_cast<std::size_t>(rng() % 4);
        for (std::size_t j = 0; j < plen; ++j)
            pre.push_back(j == 0 ? draw(-10, 10) : draw(1, 12));
        std::size_t clen = 1 + static_cast<std::size_t>(rng() % 6);
        for (std::size_t j = 0; j < clen; ++j) per.push_back(draw(1, 12));
        CFExpansion cf = make_cf(pre, per);
        NEED(expand(eval_periodic(cf)) == cf, "eval/expand round trip fails");
    }

    for (int w = 0; w < 10; ++w) {
        std::size_t half = 1 + static_cast<std::size_t>(rng() % 2);
        bool middle = rng() % 2 == 0;
        std::vector<Int> word;
        for (std::size_t j = 0; j < half; ++j) word.push_back(draw(1, 6));
        if (middle) word.push_back(draw(1, 6));
        for (std::size_t j = half; j > 0; --j) word.push_back(word[j - 1]);
        Palindrome pal = make_palindrome(word);
        std::set<std::pair<Int, Int>> seen;
        Int base = k_min(pal);
        for (Int k = base; k <= base + 30; ++k) {
            ConstructionResult r = construct(pal, k, 0);
            NEED(check_construction(r).matches, "window case fails to verify");
            NEED(is_algebraic_integer(pal, r.s), "window case not integral");
            NEED(seen.insert({r.s, r.t}).second, "window case not distinct");
        }
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*fn)();
    };
    const Criterion list[] = {
        {"construction (2,5,5,2) at k=-11", prescribed_period_example},
        {"construction (2,1,1,2,1,1,2) at k=5", seven_letter_example},
        {"family (1,1,2m,1,1) at k=m+2", five_letter_family},
        {"period collapse of (1,1,2m+1,1,1)", period_collapse},
        {"sleeper table beta(2,2x,2)", sleeper_table},
        {"constant-word closed forms vs expansion", closed_forms_vs_expansion},
        {"doubling transducer vs expansion", doubling_transducer},
        {"Pell identities and fundamental solutions", pell_identities},
        {"sqrt admissibility vs brute-force scan", admissibility_scan},
        {"algebra invariants and round trips", invariant_battery},
    };

    int failed = 0;
    for (std::size_t i = 0; i < std::size(list); ++i) {
        bool ok = false;
        why.clear();
        try {
            ok = list[i].fn();
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        std::cout << "criterion " << i + 1 << " (" << list[i].name
                  << "): " << (ok ? "PASS" : "FAIL");
        if (!ok) {
            std::cout << " -- " << why;
            ++failed;
        }
        std::cout << "\n";
    }
    if (failed) std::cout << failed << " criteria failed\n";
    return failed == 0 ? 0 : 1;
}