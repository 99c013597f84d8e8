#include "palcf/pell.hpp"

#include "palcf/errors.hpp"
#include "palcf/fibpoly.hpp"
#include "palcf/surd.hpp"

namespace palcf {

namespace {

bool solves(const Int& x, const Int& y, const Int& d, int kind) {
    return x * x - d * y * y == kind;
}

// First convergent of sqrt(d) whose residual h^2 - d k^2 equals `kind`,
// within two full periods. Consecutive convergents are coprime, so these
// hits are exactly the primitive solutions in that range.
std::optional<PellSolution> convergent_hit(const CFExpansion& cf, const Int& d,
                                           int kind) {
    std::size_t span = 2 * cf.period.size() + 2;
    Int h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
    for (std::size_t i = 0; i < span; ++i) {
        Int a = cf_term(cf, i);
        Int h = a * h_prev + h_prev2;
        Int k = a * k_prev + k_prev2;
        if (h * h - d * k * k == kind) return PellSolution{h, k, kind};
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
    }
    return std::nullopt;
}

}  // namespace

std::optional<PellSolution> pell_oracle(const Int& d, int kind) {
    check(kind == 1 || kind == -1 || kind == 4 || kind == -4, Errc::domain,
          "kind must be one of +1, -1, +4, -4");
    check(d >= 1, Errc::domain, "d must be positive");
    check(!is_square(d), Errc::square_discriminant,
          "d must not be a perfect square");

    CFExpansion cf = expand(make_surd(0, 1, d));
    if (kind == 1 || kind == -1) return convergent_hit(cf, d, kind);

    auto one = convergent_hit(cf, d, 1);
    check(one.has_value(), Errc::internal, "unit solution not found");

    if (d <= 16) {
        // 4 is not below sqrt(d) here, so solutions need not be convergents;
        // the minimal y is at most 2*y(+1) + 2, which is tiny for such d.
        Int bound = 2 * one->y + 2;
        for (Int y = 1; y <= bound; ++y) {
            Int xx = d * y * y + kind;
            if (xx >= 1 && is_square(xx)) return PellSolution{isqrt(xx), y, kind};
        }
        return std::nullopt;
    }

    std::optional<PellSolution> best = convergent_hit(cf, d, kind);
    if (kind == 4) {
        PellSolution doubled{2 * one->x, 2 * one->y, 4};
        if (!best || doubled.y < best->y) best = doubled;
    } else {
        auto neg = convergent_hit(cf, d, -1);
        if (neg) {
            PellSolution doubled{2 * neg->x, 2 * neg->y, -4};
            if (!best || doubled.y < best->y) best = doubled;
        }
    }
    return best;
}

Int t_value(long long n, const Int& m, const Int& s) {
    check(n >= 1, Errc::domain, "word length must be positive");
    check(m >= 1, Errc::domain, "letter must be positive");
    check(s >= 1, Errc::domain, "s must be positive");
    return fib(n + 1, m) * s + 2 * fib(n, m);
}

PellSolution lift_neg4(const Int& u, const Int& v, const Int& d) {
    check(u >= 1 && v >= 1, Errc::precondition, "seed must be positive");
    check(solves(u, v, d, -4), Errc::precondition, "seed does not solve -4");
    check(mod_floor(d, 4) != 0, Errc::precondition, "d must not be 0 mod 4");

    PellSolution out{0, 0, -1};
    if (is_even(u) && is_even(v)) {
        out.x = u / 2;
        out.y = v / 2;
    } else {
        check(!is_even(u), Errc::precondition,
              "u even with v odd contradicts d not 0 mod 4");
        out.x = (u * u * u + 3 * u) / 2;
        out.y = (u * u + 1) * v / 2;
    }
    check(solves(out.x, out.y, d, -1), Errc::internal, "lift lost the norm");
    return out;
}

PellSolution lift_pos4(const Int& u, const Int& v, const Int& d) {
    check(u >= 1 && v >= 1, Errc::precondition, "seed must be positive");
    check(solves(u, v, d, 4), Errc::precondition, "seed does not solve +4");

    PellSolution out{0, 0, 1};
    if (is_even(u) && is_even(v)) {
        out.x = u / 2;
        out.y = v / 2;
    } else if (is_even(u)) {
        out.x = (u * u - 2) / 2;
        out.y = u * v / 2;
    } else {
        out.x = (u * u * u - 3 * u) / 2;
        out.y = (u * u - 1) * v / 2;
    }
    check(solves(out.x, out.y, d, 1), Errc::internal, "lift lost the norm");
    return out;
}

PellResult fundamental_negative(long long n, const Int& m, const Int& k) {
    check(n % 2 == 0 && !is_even(k), Errc::parity,
          "the negative equation needs n even and k odd");
    FibConstruction fc = fib_construct(n, m, k);

    PellResult r;
    r.d = fc.s * fc.s - 4 * fc.t;
    r.s = fc.s;
    r.t = fc.t;
    Int u = t_value(n, m, fc.s);
    Int v = fib(n + 1, m);
    check(solves(u, v, r.d, -4), Errc::internal, "seed identity failed");
    r.branch = (is_even(u) && is_even(v)) ? "half" : "cube";
    r.sol = lift_neg4(u, v, r.d);
    return r;
}

PellResult fundamental_positive(long long n, const Int& m, const Int& k) {
    FibConstruction fc = fib_construct(n, m, k);

    PellResult r;
    r.d = fc.s * fc.s - 4 * fc.t;
    r.s = fc.s;
    r.t = fc.t;
    if (n % 2 == 0) {
        if (!is_even(k)) {
            PellResult neg = fundamental_negative(n, m, k);
            r.branch = "negative";
            r.sol = PellSolution{2 * neg.sol.x * neg.sol.x + 1,
                                 2 * neg.sol.x * neg.sol.y, 1};
        } else {
            auto sol = pell_oracle(r.d, 1);
            check(sol.has_value(), Errc::internal, "unit solution not found");
            r.branch = "oracle";
            r.sol = *sol;
        }
    } else {
        Int u = t_value(n, m, fc.s);
        Int v = fib(n + 1, m);
        check(solves(u, v, r.d, 4), Errc::internal, "seed identity failed");
        r.branch = (is_even(u) && is_even(v)) ? "half"
                   : is_even(u)               ? "square"
                                              : "cube";
        r.sol = lift_pos4(u, v, r.d);
    }
    check(solves(r.sol.x, r.sol.y, r.d, 1), Errc::internal,
          "solution lost the norm");
    return r;
}

}  // namespace palcf
