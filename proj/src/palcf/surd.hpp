#pragma once

#include <string>
#include <vector>

#include "palcf/bignum.hpp"
#include "palcf/cf.hpp"

namespace palcf {

/// Quadratic irrational (p + sqrt(d)) / q.
///
/// Invariants: q != 0, d > 0 and not a perfect square, q divides d - p^2.
/// The divisibility keeps the expansion recurrence integral. The triple is
/// not unique for a given value; equality compares values, not triples.
struct QuadraticSurd {
    Int p, q, d;

    bool operator==(const QuadraticSurd& o) const {
        return p * o.q == o.p * q && d * o.q * o.q == o.d * q * q && (q > 0) == (o.q > 0);
    }
};

// Canonicalize a raw triple, scaling by |q| when q does not divide d - p^2.
QuadraticSurd make_surd(Int p, Int q, Int d);

// The root (-s + sqrt(s^2 - 4t)) / 2 of x^2 + s x + t.
QuadraticSurd root_of_monic(const Int& s, const Int& t);

Int surd_floor(const QuadraticSurd& v);

inline QuadraticSurd shifted(const QuadraticSurd& v, const Int& c) {
    return QuadraticSurd{v.p + c * v.q, v.q, v.d};
}

inline QuadraticSurd doubled(const QuadraticSurd& v) {
    return QuadraticSurd{2 * v.p, v.q, 4 * v.d};
}

// Full continued fraction expansion. The (p, q) state space of the tail
// recurrence is finite, so the first repeated state closes the cycle; states
// are in bijection with tail values, which makes preperiod and period minimal.
CFExpansion expand(const QuadraticSurd& v);

// Exact value of an eventually periodic continued fraction.
QuadraticSurd eval_periodic(const CFExpansion& cf);

/// Continuant pairs of a word a1..an:
///   A = (A0..An), A0 = 1, A1 = a1, Ah = ah A(h-1) + A(h-2)
///   B = (B0..Bn), B0 = 0, B1 = 1,  Bh = ah B(h-1) + B(h-2)
struct Convergents {
    std::vector<Int> A, B;
};

Convergents convergents(const std::vector<Int>& word);

// Divide out a common square factor for display (cosmetic; small factors only).
QuadraticSurd reduced(const QuadraticSurd& v);

std::string format_surd(const QuadraticSurd& v);

}  // namespace palcf
