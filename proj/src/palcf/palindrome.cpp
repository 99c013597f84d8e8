#include "palcf/palindrome.hpp"

#include <utility>

#include "palcf/errors.hpp"

namespace palcf {

namespace {

// Continuant data for the word a1..an, with the sign (-1)^n.
struct WordData {
    std::size_t n;
    Int sgn;
    Int A_prev, A_last;  // A(n-1), An
    Int B_prev, B_last;  // B(n-1), Bn
};

WordData word_data(const Palindrome& pal) {
    Convergents c = convergents(pal.word);
    std::size_t n = pal.word.size();
    WordData w;
    w.n = n;
    w.sgn = (n % 2 == 0) ? 1 : -1;
    w.A_prev = c.A[n - 1];
    w.A_last = c.A[n];
    w.B_prev = c.B[n - 1];
    w.B_last = c.B[n];
    return w;
}

Int s_of(const WordData& w, const Int& k) {
    return w.sgn * w.A_prev * w.B_prev + k * w.A_last;
}

Int t_of(const WordData& w, const Int& k) {
    return -w.sgn * w.B_prev * w.B_prev - k * w.B_last;
}

}  // namespace

Palindrome make_palindrome(std::vector<Int> word) {
    check(!word.empty(), Errc::empty_word, "palindrome word must be nonempty");
    for (const Int& a : word)
        check(a >= 1, Errc::domain, "partial quotients must be positive");
    std::size_t n = word.size();
    for (std::size_t i = 0; i < n / 2; ++i)
        check(word[i] == word[n - 1 - i], Errc::not_palindrome,
              "word is not mirror-symmetric");
    return Palindrome{std::move(word)};
}

Int k_min(const Palindrome& pal) {
    WordData w = word_data(pal);
    Int k1 = ceil_div(-w.sgn * w.A_prev * w.B_prev, w.A_last);
    if (s_of(w, k1) == 0) k1 += 1;
    return k1;
}

ConstructionResult construct(const Palindrome& pal, const Int& k, const Int& a0) {
    WordData w = word_data(pal);
    Int k1 = k_min(pal);
    check(k >= k1, Errc::k_too_small, "k below the smallest admissible value");

    ConstructionResult r;
    r.pal = pal;
    r.k = k;
    r.k_min = k1;
    r.a0 = a0;
    r.s = s_of(w, k);
    r.t = t_of(w, k);
    r.alpha = shifted(root_of_monic(r.s, r.t), a0);
    r.poly_linear = r.s - 2 * a0;
    r.poly_constant = a0 * a0 - r.s * a0 + r.t;

    // 0 < alpha - a0 < 1, i.e. s^2 < s^2 - 4t < (s+2)^2.
    Int disc = r.s * r.s - 4 * r.t;
    check(r.t < 0 && disc < (r.s + 2) * (r.s + 2), Errc::internal,
          "fractional part escaped the unit interval");
    return r;
}

ConstructionCheck check_construction(const ConstructionResult& r) {
    std::vector<Int> period = r.pal.word;
    period.push_back(r.s);
    std::size_t prescribed_len = period.size();

    ConstructionCheck c;
    c.prescribed = make_cf({r.a0}, std::move(period));
    c.expansion = expand(r.alpha);
    c.matches = c.prescribed == c.expansion;
    c.collapsed = c.expansion.period.size() < prescribed_len;
    return c;
}

ResidueClass admissible_s(const Palindrome& pal) {
    WordData w = word_data(pal);
    return ResidueClass{mod_floor(w.sgn * w.A_prev * w.B_prev, w.A_last),
                        w.A_last};
}

bool is_algebraic_integer(const Palindrome& pal, const Int& s, const Int&) {
    check(s >= 1, Errc::domain, "s must be a positive partial quotient");
    ResidueClass cls = admissible_s(pal);
    return mod_floor(s - cls.value, cls.modulus) == 0;
}

SqrtAdmissibility sqrt_admissibility(const Palindrome& pal) {
    WordData w = word_data(pal);
    bool possible =
        is_even(w.B_prev) || (!is_even(w.B_prev) && is_even(w.B_last));
    if (!possible) return SqrtAdmissibility{false, std::nullopt};

    // Solve 2 a0 = c (mod M) with c the admissible residue of s.
    Int M = w.A_last;
    Int c = mod_floor(w.sgn * w.A_prev * w.B_prev, M);
    ResidueClass cls;
    if (!is_even(M)) {
        cls.modulus = M;
        cls.value = mod_floor(c * ((M + 1) / 2), M);
    } else {
        // An even with c odd would leave the congruence unsolvable; the
        // parity conditions above exclude it, but map it to "impossible"
        // rather than trusting that exclusion.
        if (!is_even(c)) return SqrtAdmissibility{false, std::nullopt};
        cls.modulus = M / 2;
        cls.value = mod_floor(c / 2, cls.modulus);
    }
    return SqrtAdmissibility{true, cls};
}

std::vector<SqrtFamilyRow> sqrt_family(const Palindrome& pal, std::size_t count) {
    SqrtAdmissibility adm = sqrt_admissibility(pal);
    check(adm.possible, Errc::not_admissible,
          "no square root has this palindrome as its period body");

    WordData w = word_data(pal);
    const ResidueClass& cls = *adm.a0_class;
    Int a0 = cls.value > 0 ? cls.value : cls.modulus;

    std::vector<SqrtFamilyRow> rows;
    rows.reserve(count);
    for (std::size_t i = 0; i < count; ++i, a0 += cls.modulus) {
        Int num = 2 * a0 - w.sgn * w.A_prev * w.B_prev;
        check(num % w.A_last == 0, Errc::internal, "residue class member off");
        Int k = num / w.A_last;
        Int t = t_of(w, k);
        Int d = a0 * a0 - t;
        check(isqrt(d) == a0, Errc::internal, "a0 is not the integer part");
        rows.push_back(SqrtFamilyRow{a0, d, k, t});
    }
    return rows;
}

}  // namespace palcf
