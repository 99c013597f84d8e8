#pragma once

#include <optional>
#include <string>

#include "palcf/bignum.hpp"

namespace palcf {

struct PellSolution {
    Int x, y;
    int kind;  // the equation solved: x^2 - d y^2 = kind
    bool operator==(const PellSolution&) const = default;
};

// Minimal positive solution of X^2 - D Y^2 = kind, kind in {1, -1, 4, -4},
// found by walking the convergents of sqrt(D) (plus a bounded direct scan
// for the |kind| = 4 equations when D <= 16, where the convergent theorem
// does not apply). Absent when no solution exists.
std::optional<PellSolution> pell_oracle(const Int& d, int kind);

// f(n+1) s + 2 f(n); with D = s^2 - 4t this satisfies
// value^2 - D f(n+1)^2 = -4 for n even and +4 for n odd.
Int t_value(long long n, const Int& m, const Int& s);

/// Minimal solution of X^2 - D Y^2 = -1 from the minimal (u, v) with
/// u^2 - D v^2 = -4: (u/2, v/2) when u and v are both even, otherwise
/// ((u^3+3u)/2, (u^2+1)v/2). Requires D not divisible by 4 (u even with
/// v odd would force 4 | D, so that pattern is rejected).
PellSolution lift_neg4(const Int& u, const Int& v, const Int& d);

/// Minimal solution of X^2 - D Y^2 = +1 from the minimal (u, v) with
/// u^2 - D v^2 = +4: the first integral candidate among
/// (u/2, v/2), ((u^2-2)/2, uv/2), ((u^3-3u)/2, (u^2-1)v/2).
PellSolution lift_pos4(const Int& u, const Int& v, const Int& d);

struct PellResult {
    Int d, s, t;
    PellSolution sol;
    std::string branch;
};

// Minimal solution of X^2 - D Y^2 = -1 for D = s^2 - 4t from (n, m, k).
// Defined for n even with k odd (otherwise the period structure of sqrt(D)
// rules the equation out); branch is "half" or "cube" by the lift taken.
PellResult fundamental_negative(long long n, const Int& m, const Int& k);

// Minimal solution of X^2 - D Y^2 = +1. Branches: "negative" (n even,
// k odd: squares the negative solution), "half"/"square"/"cube" (n odd
// lifts), or "oracle" (n even, k even: no closed form, convergent search).
PellResult fundamental_positive(long long n, const Int& m, const Int& k);

}  // namespace palcf
