#include "palcf/fibpoly.hpp"

#include "palcf/errors.hpp"

namespace palcf {

Int fib(long long h, const Int& m) {
    long long a = h < 0 ? -h : h;
    Int prev = 0, cur = 1;  // f(0), f(1)
    if (a == 0) return prev;
    for (long long i = 1; i < a; ++i) {
        Int next = m * cur + prev;
        prev = cur;
        cur = next;
    }
    if (h < 0 && a % 2 == 0) return -cur;
    return cur;
}

Int fib_k_min(long long n, const Int& m) {
    Int f = fib(n - 2, m);
    return (n % 2 == 1 ? f : -f) + 1;
}

FibConstruction fib_construct(long long n, const Int& m, const Int& k) {
    check(n >= 1, Errc::domain, "word length must be positive");
    check(m >= 1, Errc::domain, "letter must be positive");
    check(k >= fib_k_min(n, m), Errc::k_too_small,
          "k below the smallest admissible value");

    Int fn = fib(n, m), fn1 = fib(n - 1, m), fn2 = fib(n + 1, m);
    Int sgn = (n % 2 == 0) ? 1 : -1;
    FibConstruction r;
    r.n = n;
    r.m = m;
    r.k = k;
    r.s = sgn * fn * fn1 + k * fn2;
    r.t = -sgn * fn1 * fn1 - k * fn;
    return r;
}

}  // namespace palcf
