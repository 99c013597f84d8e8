#include "palcf/surd.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace palcf {

QuadraticSurd make_surd(Int p, Int q, Int d) {
    check(q != 0, Errc::zero_denominator, "denominator must be nonzero");
    check(d > 0, Errc::square_discriminant, "radicand must be positive");
    check(!is_square(d), Errc::square_discriminant, "radicand must not be a perfect square");
    if ((d - p * p) % q != 0) {
        Int a = abs(q);
        p *= a;
        d *= a * a;
        q *= a;
    }
    return QuadraticSurd{std::move(p), std::move(q), std::move(d)};
}

QuadraticSurd root_of_monic(const Int& s, const Int& t) {
    Int disc = s * s - 4 * t;
    check(disc > 0, Errc::domain, "discriminant must be positive");
    check(!is_square(disc), Errc::rational_root, "discriminant is a perfect square");
    // q = 2 divides disc - s^2 = -4t, so the triple is already canonical.
    return QuadraticSurd{-s, 2, disc};
}

Int surd_floor(const QuadraticSurd& v) {
    Int r = isqrt(v.d);
    // sqrt(d) is irrational, so p + sqrt(d) lies strictly between p+r and p+r+1.
    if (v.q > 0) return floor_div(v.p + r, v.q);
    return floor_div(-v.p - r - 1, -v.q);
}

CFExpansion expand(const QuadraticSurd& v) {
    Int p = v.p, q = v.q;
    const Int& d = v.d;
    Int r = isqrt(d);

    std::map<std::pair<Int, Int>, std::size_t> seen;
    std::vector<Int> terms;
    for (;;) {
        auto [it, fresh] = seen.emplace(std::pair<Int, Int>(p, q), terms.size());
        if (!fresh) {
            std::size_t start = it->second;
            CFExpansion cf;
            cf.preperiod.assign(terms.begin(), terms.begin() + start);
            cf.period.assign(terms.begin() + start, terms.end());
            return cf;
        }
        Int a = q > 0 ? floor_div(p + r, q) : floor_div(-p - r - 1, -q);
        terms.push_back(a);
        Int pn = a * q - p;
        Int qn = (d - pn * pn) / q;
        p = std::move(pn);
        q = std::move(qn);
    }
}

Convergents convergents(const std::vector<Int>& word) {
    Convergents cv;
    cv.A.reserve(word.size() + 1);
    cv.B.reserve(word.size() + 1);
    cv.A.push_back(1);
    cv.B.push_back(0);
    Int a2 = 0, b2 = 1;  // A(-1) = 0, B(-1) = 1
    for (const Int& a : word) {
        check(a >= 1, Errc::domain, "partial quotients must be positive");
        Int an = a * cv.A.back() + a2;
        Int bn = a * cv.B.back() + b2;
        a2 = cv.A.back();
        b2 = cv.B.back();
        cv.A.push_back(std::move(an));
        cv.B.push_back(std::move(bn));
    }
    return cv;
}

QuadraticSurd eval_periodic(const CFExpansion& raw) {
    CFExpansion cf = make_cf(raw.preperiod, raw.period);

    // Tail value tau = [c1; c2..cL, tau] solves BL x^2 + (B(L-1) - AL) x - A(L-1) = 0.
    Convergents cv = convergents(cf.period);
    std::size_t L = cf.period.size();
    Int P = cv.A[L] - cv.B[L - 1];
    Int Q = 2 * cv.B[L];
    Int D = P * P + 4 * cv.A[L - 1] * cv.B[L];
    QuadraticSurd v{P, Q, D};  // Q | D - P^2 since D - P^2 = 4 A(L-1) B(L)

    // Fold the preperiod back on: v := c + 1/v, keeping d fixed.
    for (auto it = cf.preperiod.rbegin(); it != cf.preperiod.rend(); ++it) {
        Int q2 = (v.d - v.p * v.p) / v.q;
        v.p = -v.p + *it * q2;
        v.q = std::move(q2);
    }
    return v;
}

QuadraticSurd reduced(const QuadraticSurd& v) {
    Int g = gcd(abs(v.p), abs(v.q));
    if (g <= 1) return v;
    Int f = 1;
    Int rest = g;
    for (Int c = 2; c * c <= rest && c < 1000000; c += (c == 2 ? 1 : 2)) {
        if (rest % c != 0) continue;
        int e = 0;
        while (rest % c == 0) {
            rest /= c;
            ++e;
        }
        int vd = 0;
        Int dd = v.d;
        while (vd < 2 * e && dd % c == 0) {
            dd /= c;
            ++vd;
        }
        for (int i = 0; i < std::min(e, vd / 2); ++i) f *= c;
    }
    if (rest > 1 && v.d % (rest * rest) == 0) f *= rest;
    if (f == 1) return v;
    QuadraticSurd out{v.p / f, v.q / f, v.d / (f * f)};
    // Keep the divisibility invariant; skip the reduction when it would break.
    if ((out.d - out.p * out.p) % out.q != 0) return v;
    return out;
}

std::string format_surd(const QuadraticSurd& raw) {
    QuadraticSurd v = reduced(raw);
    std::ostringstream out;
    if (v.q == 1) {
        if (v.p != 0) out << v.p << '+';
        out << "sqrt(" << v.d << ')';
    } else {
        out << '(' << v.p << "+sqrt(" << v.d << "))/" << v.q;
    }
    return out.str();
}

}  // namespace palcf
