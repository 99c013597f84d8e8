#include <functional>
#include <random>
#include <vector>

#include "doctest.h"
#include "palcf/errors.hpp"
#include "palcf/fibpoly.hpp"
#include "palcf/raney.hpp"

using namespace palcf;

namespace {

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a throw");
    return Errc::internal;
}

Run R(Int c) { return Run{Letter::R, std::move(c)}; }
Run L(Int c) { return Run{Letter::L, std::move(c)}; }

}  // namespace

TEST_CASE("normalize_word merges and rotates") {
    // Wrap-around: the leading run moves to the pre, the tail absorbs it.
    LRWord w = normalize_word(LRWord{{}, {R(1), L(3), R(2)}});
    CHECK(w.pre == std::vector<Run>{R(1)});
    CHECK(w.cycle == std::vector<Run>{L(3), R(3)});

    // Boundary: the cycle start shifts past a run matching the pre tail.
    w = normalize_word(LRWord{{R(2)}, {R(1), L(1)}});
    CHECK(w.pre == std::vector<Run>{R(3)});
    CHECK(w.cycle == std::vector<Run>{L(1), R(1)});

    // Adjacent equal letters merge, empty runs drop.
    w = normalize_word(LRWord{{R(1), R(2), L(0)}, {L(2), L(1), R(4)}});
    CHECK(w.pre == std::vector<Run>{R(3)});
    CHECK(w.cycle == std::vector<Run>{L(3), R(4)});

    CHECK(code_of([] { normalize_word(LRWord{{}, {}}); }) == Errc::empty_word);
    CHECK(code_of([] { normalize_word(LRWord{{}, {R(2), R(3)}}); }) ==
          Errc::domain);
}

TEST_CASE("cf_to_word encodes and word_to_cf decodes") {
    CFExpansion c = make_cf({0}, {2, 2});
    LRWord w = cf_to_word(c);
    CHECK(w.pre.empty());
    CHECK(w.cycle == std::vector<Run>{L(2), R(2)});
    CHECK(word_to_cf(w) == c);

    // Odd period doubles so the cycle keeps letter parity.
    c = make_cf({0}, {2, 5, 5, 2, 107});
    w = cf_to_word(c);
    CHECK(w.cycle.size() == 10);
    CHECK(word_to_cf(w) == c);

    CHECK(code_of([] { cf_to_word(make_cf({1}, {2})); }) == Errc::domain);
    CHECK(code_of([] { cf_to_word(make_cf({0, 3}, {2, 1})); }) == Errc::domain);
}

TEST_CASE("word_to_cf handles every pre shape") {
    CHECK(word_to_cf(LRWord{{R(3), L(2)}, {R(1), L(4)}}) ==
          make_cf({3, 2}, {1, 4}));
    CHECK(word_to_cf(LRWord{{L(2)}, {R(1), L(4)}}) == make_cf({0, 2}, {1, 4}));
    CHECK(word_to_cf(LRWord{{}, {L(1), R(2)}}) == make_cf({0}, {1, 2}));
    CHECK(word_to_cf(LRWord{{}, {R(2), L(1)}}) == make_cf({}, {2, 1}));
}

TEST_CASE("doubling matches the oracle on fixed values") {
    // -1+sqrt(2) doubles to -2+sqrt(8).
    CFExpansion c = expand(make_surd(-1, 1, 2));
    CHECK(c == make_cf({0}, {2}));
    CFExpansion d = word_to_cf(double_word(cf_to_word(c)));
    CHECK(d == expand(make_surd(-2, 1, 8)));
    CHECK(d == make_cf({0}, {1, 4}));

    // -14+sqrt(207) doubles to -28+sqrt(828).
    c = expand(make_surd(-14, 1, 207));
    d = word_to_cf(double_word(cf_to_word(c)));
    CHECK(d == expand(make_surd(-28, 1, 828)));

    // (-13+sqrt(205))/2 doubles across a run-splitting cycle boundary.
    c = expand(make_surd(-13, 2, 205));
    d = word_to_cf(double_word(cf_to_word(c)));
    CHECK(d == expand(make_surd(-13, 1, 205)));
    CHECK(d == make_cf({1}, {3, 6, 1, 4, 1, 6, 3, 28}));
}

TEST_CASE("doubling matches the oracle on random periodic values") {
    std::mt19937_64 rng(816);
    auto draw = [&rng](long long lo, long long hi) {
        return lo + static_cast<long long>(rng() % (hi - lo + 1));
    };
    for (int i = 0; i < 300; ++i) {
        std::vector<Int> per;
        long long len = draw(1, 8);
        for (long long j = 0; j < len; ++j) per.push_back(draw(1, 9));
        CFExpansion c = make_cf({0}, per);
        QuadraticSurd alpha = eval_periodic(c);
        c = expand(alpha);  // minimal form, preperiod [0]
        CFExpansion got = word_to_cf(double_word(cf_to_word(c)));
        CHECK(got == expand(doubled(alpha)));
    }
}

TEST_CASE("beta closed forms against frozen expansions") {
    BetaResult b = beta(2, 2, 2);
    CHECK(b.d == 164);
    CHECK(b.s == 12);
    CHECK(b.branch == "even-n-even-k");
    CHECK(b.cf == make_cf({12}, {1, 4, 6, 4, 1, 24}));

    b = beta(2, 4, 1);
    CHECK(b.d == 461);
    CHECK(b.branch == "even-n-odd-k");
    CHECK(b.cf ==
          make_cf({21}, {2, 8, 10, 1, 1, 1, 1, 1, 1, 1, 1, 10, 8, 2, 42}));

    b = beta(2, 2, 3);
    CHECK(b.d == 317);
    CHECK(b.branch == "even-n-odd-k-m2");
    CHECK(b.cf == make_cf({17}, {1, 4, 8, 1, 2, 2, 1, 8, 4, 1, 34}));

    b = beta(2, 2, 1);
    CHECK(b.d == 61);
    CHECK(b.cf == make_cf({7}, {1, 4, 3, 1, 2, 2, 1, 3, 4, 1, 14}));

    b = beta(1, 2, 2);
    CHECK(b.d == 24);
    CHECK(b.branch == "odd-n");
    CHECK(b.cf == make_cf({4}, {1, 8}));

    b = beta(3, 1, 5);
    CHECK(b.d == 205);
    CHECK(b.branch == "generic");
    CHECK(b.cf == make_cf({14}, {3, 6, 1, 4, 1, 6, 3, 28}));

    b = beta(2, 3, 2);
    CHECK(b.d == 557);
    CHECK(b.branch == "generic");
    CHECK(b.cf == make_cf({23}, {1, 1, 1, 1, 46}));
}

TEST_CASE("beta always agrees with direct expansion") {
    for (long long n = 1; n <= 5; ++n)
        for (Int m = 1; m <= 5; ++m)
            for (Int off = 0; off <= 3; ++off) {
                BetaResult b = beta(n, m, fib_k_min(n, m) + off);
                CHECK(b.cf == expand(make_surd(0, 1, b.d)));
            }
}

TEST_CASE("beta rejects k below the bound") {
    CHECK(code_of([] { beta(2, 2, 0); }) == Errc::k_too_small);
}