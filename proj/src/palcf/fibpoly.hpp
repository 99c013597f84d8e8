#pragma once

#include "palcf/bignum.hpp"

namespace palcf {

// f(0) = 0, f(1) = 1, f(h) = m f(h-1) + f(h-2), extended to negative
// indices by f(-h) = (-1)^(h-1) f(h).
Int fib(long long h, const Int& m);

// Smallest k admitted by the constant-word construction:
// (-1)^(n-1) f(n-2) + 1. One below it the appended quotient equals m and
// the period collapses to the single letter m.
Int fib_k_min(long long n, const Int& m);

// Trace and norm data for the constant word of length n:
//   s = (-1)^n f(n) f(n-1) + k f(n+1)
//   t = (-1)^(n-1) f(n-1)^2 - k f(n)
struct FibConstruction {
    long long n;
    Int m, k, s, t;
};

FibConstruction fib_construct(long long n, const Int& m, const Int& k);

}  // namespace palcf
