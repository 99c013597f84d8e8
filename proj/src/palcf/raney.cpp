#include "palcf/raney.hpp"

#include <map>
#include <utility>

#include "palcf/errors.hpp"
#include "palcf/fibpoly.hpp"

namespace palcf {

namespace {

void append_run(std::vector<Run>& runs, Letter letter, const Int& count) {
    if (count == 0) return;
    if (!runs.empty() && runs.back().letter == letter)
        runs.back().count += count;
    else
        runs.push_back(Run{letter, count});
}

std::vector<Run> merged(const std::vector<Run>& runs) {
    std::vector<Run> out;
    for (const Run& r : runs) {
        check(r.count >= 0, Errc::domain, "run length must be nonnegative");
        append_run(out, r.letter, r.count);
    }
    return out;
}

Int letter_count(const std::vector<Run>& runs) {
    Int total = 0;
    for (const Run& r : runs) total += r.count;
    return total;
}

enum class St { M, N, P, Q };

// Consume one run, append the rewritten output, return the next state.
St step(St st, const Run& run, std::vector<Run>& out) {
    const Int& e = run.count;
    bool even = is_even(e);
    switch (st) {
        case St::M:
            if (run.letter == Letter::R) {
                append_run(out, Letter::R, 2 * e);
                return St::M;
            }
            append_run(out, Letter::L, (even ? e : e - 1) / 2);
            return even ? St::M : St::P;
        case St::N:
            if (run.letter == Letter::L) {
                append_run(out, Letter::L, 2 * e);
                return St::N;
            }
            append_run(out, Letter::R, (even ? e : e - 1) / 2);
            return even ? St::N : St::Q;
        case St::P:
            check(run.letter == Letter::R, Errc::internal, "P expects an R-run");
            append_run(out, Letter::R, 1);
            append_run(out, Letter::L, 1);
            append_run(out, Letter::R, (even ? e - 2 : e - 1) / 2);
            return even ? St::Q : St::N;
        case St::Q:
            check(run.letter == Letter::L, Errc::internal, "Q expects an L-run");
            append_run(out, Letter::L, 1);
            append_run(out, Letter::R, 1);
            append_run(out, Letter::L, (even ? e - 2 : e - 1) / 2);
            return even ? St::P : St::M;
    }
    fail(Errc::internal, "unreachable transducer state");
}

std::vector<Int> alternating_block(const Int& m, long long len) {
    std::vector<Int> v;
    v.reserve(static_cast<std::size_t>(len));
    for (long long i = 0; i < len; ++i)
        v.push_back(i % 2 == 0 ? Int(m / 2) : Int(2 * m));
    return v;
}

}  // namespace

LRWord normalize_word(LRWord w) {
    LRWord out;
    out.pre = merged(w.pre);
    out.cycle = merged(w.cycle);
    check(!out.cycle.empty(), Errc::empty_word, "word needs a nonempty cycle");

    bool has_r = false, has_l = false;
    for (const Run& r : out.cycle) (r.letter == Letter::R ? has_r : has_l) = true;
    check(has_r && has_l, Errc::domain, "cycle must use both letters");

    // When the cycle starts and ends with the same letter the wrap-around
    // joins them into one run. The first pass still emits the leading run
    // on its own, so it moves to the pre and the tail run absorbs it.
    if (out.cycle.front().letter == out.cycle.back().letter) {
        Run f = out.cycle.front();
        out.cycle.erase(out.cycle.begin());
        out.cycle.back().count += f.count;
        append_run(out.pre, f.letter, f.count);
    }
    // The first cycle run merges into the pre on its first pass only; shift
    // the cycle start past it.
    if (!out.pre.empty() && out.pre.back().letter == out.cycle.front().letter) {
        Run f = out.cycle.front();
        out.cycle.erase(out.cycle.begin());
        out.pre.back().count += f.count;
        out.cycle.push_back(f);
    }
    return out;
}

LRWord cf_to_word(const CFExpansion& cf) {
    check(cf.preperiod.size() == 1 && cf.preperiod[0] == 0, Errc::domain,
          "value must be purely periodic after a zero integer part");
    for (const Int& a : cf.period)
        check(a >= 1, Errc::domain, "partial quotients must be positive");

    std::vector<Int> block = cf.period;
    if (block.size() % 2 == 1)
        block.insert(block.end(), cf.period.begin(), cf.period.end());

    LRWord w;
    w.cycle.reserve(block.size());
    for (std::size_t i = 0; i < block.size(); ++i)
        w.cycle.push_back(Run{i % 2 == 0 ? Letter::L : Letter::R, block[i]});
    return normalize_word(w);
}

LRWord double_word(const LRWord& word) {
    LRWord w = normalize_word(word);
    std::vector<Run> out;
    St st = St::M;
    for (const Run& r : w.pre) st = step(st, r, out);

    // Emission becomes periodic once (state, cycle position) recurs.
    std::map<std::pair<int, std::size_t>, Int> seen;
    std::size_t idx = 0;
    Int pre_letters;
    for (;;) {
        auto key = std::make_pair(static_cast<int>(st), idx);
        auto [it, fresh] = seen.emplace(key, letter_count(out));
        if (!fresh) {
            pre_letters = it->second;
            break;
        }
        st = step(st, w.cycle[idx], out);
        idx = (idx + 1) % w.cycle.size();
    }

    LRWord result;
    Int remaining = pre_letters;
    std::size_t i = 0;
    while (i < out.size() && remaining > 0) {
        if (out[i].count <= remaining) {
            remaining -= out[i].count;
            result.pre.push_back(std::move(out[i]));
            ++i;
        } else {
            result.pre.push_back(Run{out[i].letter, remaining});
            out[i].count -= remaining;
            remaining = 0;
        }
    }
    result.cycle.assign(out.begin() + static_cast<std::ptrdiff_t>(i), out.end());
    check(!result.cycle.empty(), Errc::internal, "doubled cycle came out empty");
    return normalize_word(result);
}

CFExpansion word_to_cf(const LRWord& word) {
    LRWord w = normalize_word(word);
    std::vector<Int> preperiod, period;
    if (!w.pre.empty()) {
        std::size_t start = 0;
        if (w.pre.front().letter == Letter::R) {
            preperiod.push_back(w.pre.front().count);
            start = 1;
        } else {
            preperiod.push_back(0);
        }
        for (std::size_t i = start; i < w.pre.size(); ++i)
            preperiod.push_back(w.pre[i].count);
    } else if (w.cycle.front().letter == Letter::L) {
        preperiod.push_back(0);
    }
    period.reserve(w.cycle.size());
    for (const Run& r : w.cycle) period.push_back(r.count);
    return make_cf(std::move(preperiod), std::move(period));
}

BetaResult beta(long long n, const Int& m, const Int& k) {
    FibConstruction fc = fib_construct(n, m, k);
    const Int& s = fc.s;
    BetaResult r;
    r.s = s;
    r.d = s * s - 4 * fc.t;
    check(!is_square(r.d), Errc::square_discriminant,
          "discriminant degenerated to a square");

    if (is_even(m) && n % 2 == 0) {
        std::vector<Int> v = alternating_block(m, n);
        std::vector<Int> period = v;
        if (is_even(k)) {
            r.branch = "even-n-even-k";
            period.push_back(s / 2);
        } else if (m == 2) {
            r.branch = "even-n-odd-k-m2";
            period.push_back((s - 1) / 2);
            period.push_back(1);
            period.insert(period.end(), static_cast<std::size_t>(n), Int(2));
            period.push_back(1);
            period.push_back((s - 1) / 2);
        } else {
            r.branch = "even-n-odd-k";
            period.push_back((s - 1) / 2);
            for (long long i = 0; i < n; ++i) {
                period.push_back(1);
                period.push_back(1);
                period.push_back((m - 2) / 2);
            }
            period.push_back(1);
            period.push_back(1);
            period.push_back((s - 1) / 2);
        }
        period.insert(period.end(), v.rbegin(), v.rend());
        period.push_back(2 * s);
        r.cf = make_cf({s}, std::move(period));
    } else if (is_even(m)) {
        r.branch = "odd-n";
        std::vector<Int> period = alternating_block(m, n);
        period.push_back(2 * s);
        r.cf = make_cf({s}, std::move(period));
    } else {
        r.branch = "generic";
        CFExpansion acf = expand(root_of_monic(s, fc.t));
        check(acf.preperiod.size() == 1 && acf.preperiod[0] == 0, Errc::internal,
              "fractional part is not purely periodic");
        CFExpansion dcf = word_to_cf(double_word(cf_to_word(acf)));
        check(!dcf.preperiod.empty(), Errc::internal,
              "doubled value lost its integer part");
        dcf.preperiod[0] += s;
        r.cf = make_cf(std::move(dcf.preperiod), std::move(dcf.period));
    }
    return r;
}

}  // namespace palcf
