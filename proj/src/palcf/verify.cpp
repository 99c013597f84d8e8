#include "palcf/verify.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "palcf/cf.hpp"
#include "palcf/errors.hpp"
#include "palcf/fibpoly.hpp"
#include "palcf/palindrome.hpp"
#include "palcf/pell.hpp"
#include "palcf/raney.hpp"
#include "palcf/surd.hpp"

namespace palcf {

namespace {

using Rng = std::mt19937_64;

// Draws reduce the raw engine output explicitly so a seed reproduces the
// same cases on every platform.
long long pick(Rng& rng, long long lo, long long hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<long long>(
                    rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::string word_str(const std::vector<Int>& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += w[i].str();
    }
    return out + ")";
}

std::string sol_str(const std::optional<PellSolution>& s) {
    if (!s) return "none";
    return "(" + s->x.str() + ", " + s->y.str() + ")";
}

// One verification case: the first failed requirement decides the record.
struct Case {
    std::string input;
    bool ok = true;
    std::string expected, got;

    explicit Case(std::string in) : input(std::move(in)) {}

    void require(bool cond, const std::string& what, const std::string& exp,
                 const std::string& g) {
        if (!ok || cond) return;
        ok = false;
        input += " [" + what + "]";
        expected = exp;
        got = g;
    }
};

void record(VerificationReport& rep, const Case& c) {
    rep.total += 1;
    if (c.ok)
        rep.passed += 1;
    else
        rep.failures.push_back({c.input, c.expected, c.got});
}

bool mirror_body(std::vector<Int> period) {
    period.pop_back();
    for (std::size_t i = 0, n = period.size(); i < n / 2; ++i)
        if (period[i] != period[n - 1 - i]) return false;
    return true;
}

// Algebraic-integer test straight from the value: the minimal polynomial
// x^2 - (2p/q) x + (p^2 - d)/q^2 is monic integral iff both coefficients are.
bool value_is_integral(const QuadraticSurd& v) {
    return (2 * v.p) % v.q == 0 && (v.p * v.p - v.d) % (v.q * v.q) == 0;
}

// Whether [a0; {word, 2 a0}] evaluates to the square root of an integer.
bool is_pure_root(const std::vector<Int>& word, const Int& a0) {
    std::vector<Int> period = word;
    period.push_back(2 * a0);
    QuadraticSurd v = eval_periodic(make_cf({a0}, std::move(period)));
    return v.p == 0 && v.d % (v.q * v.q) == 0;
}

void palindrome_case(Rng& rng, const VerifyOptions& o, VerificationReport& rep) {
    long long len = pick(rng, 1, std::max<long long>(1, o.max_n));
    std::vector<Int> word(static_cast<std::size_t>(len));
    for (long long i = 0; 2 * i < len; ++i)
        word[static_cast<std::size_t>(i)] =
            word[static_cast<std::size_t>(len - 1 - i)] =
                pick(rng, 1, std::max<long long>(1, o.max_m));
    Palindrome pal = make_palindrome(word);
    Int k = k_min(pal) + pick(rng, 0, o.max_k);
    Int a0 = pick(rng, -5, 5);

    Case c("palindrome word=" + word_str(word) + " k=" + k.str() +
           " a0=" + a0.str());
    try {
        std::size_t n = word.size();
        Convergents cv = convergents(word);
        Int sgn = (n % 2 == 0) ? 1 : -1;
        c.require(cv.A[n] * cv.B[n - 1] - cv.B[n] * cv.A[n - 1] == sgn,
                  "determinant identity", sgn.str(),
                  Int(cv.A[n] * cv.B[n - 1] - cv.B[n] * cv.A[n - 1]).str());
        c.require(cv.A[n - 1] == cv.B[n], "mirror continuant identity",
                  cv.B[n].str(), cv.A[n - 1].str());

        ConstructionResult r = construct(pal, k, a0);
        ConstructionCheck chk = check_construction(r);
        c.require(chk.matches, "prescribed period vs direct expansion",
                  format_cf(chk.prescribed), format_cf(chk.expansion));
        Int top = *std::max_element(word.begin(), word.end());
        if (r.s > top)
            c.require(!chk.collapsed &&
                          chk.expansion.period.size() == word.size() + 1,
                      "period length n+1", std::to_string(word.size() + 1),
                      std::to_string(chk.expansion.period.size()));

        ConstructionResult base = construct(pal, k, 0);
        c.require(shifted(base.alpha, a0) == r.alpha,
                  "integer part only shifts the value", format_surd(r.alpha),
                  format_surd(shifted(base.alpha, a0)));

        c.require(eval_periodic(chk.expansion) == r.alpha,
                  "expansion evaluates back to the value", format_surd(r.alpha),
                  format_surd(eval_periodic(chk.expansion)));
        c.require(expand(eval_periodic(chk.prescribed)) == chk.prescribed,
                  "expansion round trip", format_cf(chk.prescribed),
                  format_cf(expand(eval_periodic(chk.prescribed))));

        for (Int sp = r.s; sp <= r.s + 2; ++sp) {
            std::vector<Int> period = word;
            period.push_back(sp);
            bool direct =
                value_is_integral(eval_periodic(make_cf({Int(0)}, period)));
            bool claimed = is_algebraic_integer(pal, sp);
            c.require(direct == claimed,
                      "integrality congruence vs minimal polynomial at s=" +
                          sp.str(),
                      direct ? "integral" : "not integral",
                      claimed ? "integral" : "not integral");
            if (sp == r.s)
                c.require(direct, "constructed s integral", "integral",
                          "not integral");
        }

        SqrtAdmissibility adm = sqrt_admissibility(pal);
        if (adm.possible) {
            std::vector<SqrtFamilyRow> rows = sqrt_family(pal, 2);
            std::vector<Int> period = word;
            period.push_back(2 * rows[0].a0);
            CFExpansion want = make_cf({rows[0].a0}, std::move(period));
            CFExpansion got = expand(make_surd(0, 1, rows[0].d));
            c.require(got == want, "square root of first family member",
                      format_cf(want), format_cf(got));
            for (const SqrtFamilyRow& row : rows)
                c.require(mod_floor(row.a0 - adm.a0_class->value,
                                    adm.a0_class->modulus) == 0,
                          "family member in the residue class",
                          adm.a0_class->value.str() + " mod " +
                              adm.a0_class->modulus.str(),
                          row.a0.str());
        } else {
            for (Int cand = 1; cand <= 30; ++cand)
                c.require(!is_pure_root(word, cand),
                          "no square root despite the parity verdict", "none",
                          "a0=" + cand.str());
        }
    } catch (const Error& e) {
        c.require(false, "unexpected error", "no exception", e.what());
    }
    record(rep, c);
}

void beta_case(Rng& rng, const VerifyOptions& o, VerificationReport& rep) {
    long long n = pick(rng, 1, std::max<long long>(1, o.max_n));
    Int m = pick(rng, 1, std::max<long long>(1, o.max_m));
    Int k = fib_k_min(n, m) + pick(rng, 0, o.max_k);

    Case c("beta n=" + std::to_string(n) + " m=" + m.str() + " k=" + k.str());
    try {
        BetaResult b = beta(n, m, k);
        CFExpansion oracle = expand(make_surd(0, 1, b.d));
        c.require(b.cf == oracle, "closed form vs direct expansion (" + b.branch + ")",
                  format_cf(oracle), format_cf(b.cf));

        std::size_t L = b.cf.period.size();
        auto nn = static_cast<std::size_t>(n);
        if (b.branch == "even-n-even-k")
            c.require(L == 2 * nn + 2, "period length 2n+2",
                      std::to_string(2 * nn + 2), std::to_string(L));
        else if (b.branch == "even-n-odd-k")
            c.require(L == 5 * nn + 5, "period length 5n+5",
                      std::to_string(5 * nn + 5), std::to_string(L));
        else if (b.branch == "even-n-odd-k-m2")
            c.require(L == 3 * nn + 5, "period length 3n+5",
                      std::to_string(3 * nn + 5), std::to_string(L));
        else if (b.branch == "odd-n")
            c.require(L == nn + 1, "period length n+1", std::to_string(nn + 1),
                      std::to_string(L));

        c.require(b.cf.preperiod.size() == 1 &&
                      b.cf.period.back() == 2 * b.cf.preperiod[0],
                  "last quotient doubles the integer part",
                  Int(2 * b.cf.preperiod[0]).str(), b.cf.period.back().str());
        c.require(mirror_body(b.cf.period), "period body is a palindrome",
                  "mirror-symmetric", format_cf(b.cf));

        FibConstruction fc = fib_construct(n, m, k);
        Int bound = 2 * fc.s + 4 * fc.t + 1;
        if (m >= 2)
            c.require(bound > 0, "doubled fractional part stays below one",
                      "positive", bound.str());
        else
            c.require(bound < 0 && fc.s + fc.t + 1 > 0,
                      "doubled fractional part lands in (1,2)", "negative",
                      bound.str());

        Palindrome cw = make_palindrome(
            std::vector<Int>(static_cast<std::size_t>(n), m));
        ConstructionResult cr = construct(cw, k, 0);
        c.require(cr.s == fc.s && cr.t == fc.t,
                  "constant word agrees with the recurrence route",
                  "(" + cr.s.str() + ", " + cr.t.str() + ")",
                  "(" + fc.s.str() + ", " + fc.t.str() + ")");
        Convergents cv = convergents(cw.word);
        for (std::size_t h = 0; h <= cw.word.size(); ++h) {
            auto hh = static_cast<long long>(h);
            c.require(cv.A[h] == fib(hh + 1, m) && cv.B[h] == fib(hh, m),
                      "continuants are the recurrence values at h=" +
                          std::to_string(h),
                      "(" + fib(hh + 1, m).str() + ", " + fib(hh, m).str() + ")",
                      "(" + cv.A[h].str() + ", " + cv.B[h].str() + ")");
        }

        long long i = pick(rng, -6, 6), j = pick(rng, -6, 6);
        Int lhs = fib(j - 1, m) * fib(i, m) + fib(j, m) * fib(i + 1, m);
        c.require(lhs == fib(i + j, m),
                  "addition law at i=" + std::to_string(i) +
                      " j=" + std::to_string(j),
                  fib(i + j, m).str(), lhs.str());
        long long h = pick(rng, -5, 5);
        Int cas = fib(h + 1, m) * fib(h - 1, m) - fib(h, m) * fib(h, m);
        c.require(cas == (h % 2 == 0 ? 1 : -1),
                  "second-order determinant at h=" + std::to_string(h),
                  h % 2 == 0 ? "1" : "-1", cas.str());

        Int k0 = fib_k_min(n, m) - 1;
        Int sgn = (n % 2 == 0) ? 1 : -1;
        Int s_collapse = sgn * fib(n, m) * fib(n - 1, m) + k0 * fib(n + 1, m);
        c.require(s_collapse == m, "one below the bound the quotient is m",
                  m.str(), s_collapse.str());
    } catch (const Error& e) {
        c.require(false, "unexpected error", "no exception", e.what());
    }
    record(rep, c);
}

void raney_case(Rng& rng, const VerifyOptions&, VerificationReport& rep) {
    long long len = pick(rng, 1, 8);
    std::vector<Int> w(static_cast<std::size_t>(len));
    for (auto& a : w) a = pick(rng, 1, 9);

    Case c("raney word=" + word_str(w));
    try {
        CFExpansion cf = make_cf({Int(0)}, w);
        QuadraticSurd alpha = eval_periodic(cf);
        CFExpansion back = expand(alpha);
        c.require(back == cf, "expansion round trip", format_cf(cf),
                  format_cf(back));

        CFExpansion transported = word_to_cf(cf_to_word(cf));
        c.require(transported == cf, "letter encoding round trip",
                  format_cf(cf), format_cf(transported));

        CFExpansion via_word = word_to_cf(double_word(cf_to_word(back)));
        CFExpansion direct = expand(doubled(alpha));
        c.require(via_word == direct, "doubling through the letter rewrite",
                  format_cf(direct), format_cf(via_word));
    } catch (const Error& e) {
        c.require(false, "unexpected error", "no exception", e.what());
    }
    record(rep, c);
}

void pell_case(Rng& rng, const VerifyOptions& o, VerificationReport& rep) {
    long long n = 2 * pick(rng, 1, std::max<long long>(1, o.max_n / 2));
    Int m = pick(rng, 1, std::max<long long>(1, o.max_m));
    Int k = fib_k_min(n, m);
    if (is_even(k)) k += 1;
    k += 2 * pick(rng, 0, o.max_k / 2);

    long long n2 = 2 * pick(rng, 1, std::max<long long>(1, (o.max_n + 1) / 2)) - 1;
    Int m2 = pick(rng, 1, std::max<long long>(1, o.max_m));
    Int k2 = fib_k_min(n2, m2) + pick(rng, 0, o.max_k);

    Case c("pell n=" + std::to_string(n) + " m=" + m.str() + " k=" + k.str() +
           " / n=" + std::to_string(n2) + " m=" + m2.str() +
           " k=" + k2.str());
    try {
        PellResult neg = fundamental_negative(n, m, k);
        auto oneg = pell_oracle(neg.d, -1);
        c.require(oneg.has_value() && *oneg == neg.sol,
                  "minimal solution of the negative equation", sol_str(oneg),
                  sol_str(neg.sol) + " (" + neg.branch + ")");
        Int T = t_value(n, m, neg.s);
        Int f = fib(n + 1, m);
        c.require(neg.d * f * f == T * T + 4, "trace identity for even length",
                  Int(T * T + 4).str(), Int(neg.d * f * f).str());
        auto o4 = pell_oracle(neg.d, -4);
        c.require(o4.has_value(), "norm -4 solvable", "a solution", "none");
        if (o4)
            c.require(lift_neg4(o4->x, o4->y, neg.d) == neg.sol,
                      "lift of the minimal -4 seed", sol_str(neg.sol),
                      sol_str(lift_neg4(o4->x, o4->y, neg.d)));

        PellResult pos = fundamental_positive(n, m, k);
        auto opos = pell_oracle(pos.d, 1);
        c.require(opos.has_value() && *opos == pos.sol,
                  "minimal solution of the unit equation", sol_str(opos),
                  sol_str(pos.sol) + " (" + pos.branch + ")");
        c.require(pos.branch == "negative", "dispatch for odd k", "negative",
                  pos.branch);

        Int ke = fib_k_min(n, m);
        if (!is_even(ke)) ke += 1;
        ke += 2 * pick(rng, 0, o.max_k / 2);
        PellResult pose = fundamental_positive(n, m, ke);
        c.require(pose.branch == "oracle", "dispatch for even k", "oracle",
                  pose.branch);
        // Only an even quotient makes s even here; odd m leaves d odd and
        // the negative equation possibly solvable.
        if (is_even(m)) {
            c.require(mod_floor(pose.d, 4) == 0, "even k and m force 4 | d",
                      "0", mod_floor(pose.d, 4).str());
            c.require(!pell_oracle(pose.d, -1).has_value(),
                      "negative equation unsolvable for 4 | d", "none",
                      sol_str(pell_oracle(pose.d, -1)));
        }

        PellResult pos2 = fundamental_positive(n2, m2, k2);
        auto opos2 = pell_oracle(pos2.d, 1);
        c.require(opos2.has_value() && *opos2 == pos2.sol,
                  "minimal solution for odd length", sol_str(opos2),
                  sol_str(pos2.sol) + " (" + pos2.branch + ")");
        Int T2 = t_value(n2, m2, pos2.s);
        Int f2 = fib(n2 + 1, m2);
        c.require(pos2.d * f2 * f2 == T2 * T2 - 4,
                  "trace identity for odd length", Int(T2 * T2 - 4).str(),
                  Int(pos2.d * f2 * f2).str());
        auto o4p = pell_oracle(pos2.d, 4);
        c.require(o4p.has_value(), "norm +4 solvable", "a solution", "none");
        if (o4p)
            c.require(lift_pos4(o4p->x, o4p->y, pos2.d) == pos2.sol,
                      "lift of the minimal +4 seed", sol_str(pos2.sol),
                      sol_str(lift_pos4(o4p->x, o4p->y, pos2.d)));
    } catch (const Error& e) {
        c.require(false, "unexpected error", "no exception", e.what());
    }
    record(rep, c);
}

}  // namespace

VerificationReport run_suite(const std::string& suite, std::size_t budget,
                             std::uint64_t seed, const VerifyOptions& opts) {
    check(budget >= 1, Errc::domain, "budget must be positive");
    check(opts.max_n >= 1 && opts.max_m >= 1 && opts.max_k >= 0, Errc::domain,
          "parameter ranges must be positive");
    bool all = suite == "all";
    check(all || suite == "palindrome" || suite == "beta" || suite == "pell" ||
              suite == "raney",
          Errc::domain, "unknown suite: " + suite);

    Rng rng(seed);
    VerificationReport rep;
    if (all || suite == "palindrome")
        for (std::size_t i = 0; i < budget; ++i) palindrome_case(rng, opts, rep);
    if (all || suite == "beta")
        for (std::size_t i = 0; i < budget; ++i) beta_case(rng, opts, rep);
    if (all || suite == "pell")
        for (std::size_t i = 0; i < budget; ++i) pell_case(rng, opts, rep);
    if (all || suite == "raney")
        for (std::size_t i = 0; i < budget; ++i) raney_case(rng, opts, rep);
    return rep;
}

}  // namespace palcf
