#pragma once

#include <optional>
#include <vector>

#include "palcf/surd.hpp"

namespace palcf {

// Nonempty mirror-symmetric word of positive partial quotients.
struct Palindrome {
    std::vector<Int> word;
};

Palindrome make_palindrome(std::vector<Int> word);

// Smallest k for which the construction yields s >= 1. This is
// ceil((-1)^(n-1) A(n-1) B(n-1) / An), bumped by one when s would be 0
// (which happens only for single-letter words).
Int k_min(const Palindrome& pal);

/// Output of the core construction: for the palindrome a1..an and k >= k_min,
///   s = (-1)^n A(n-1) B(n-1) + k An
///   t = (-1)^(n-1) B(n-1)^2 - k Bn
/// and alpha = a0 + [0; {a1..an, s}] is an algebraic integer with minimal
/// polynomial x^2 + (s - 2 a0) x + (a0^2 - s a0 + t).
struct ConstructionResult {
    Palindrome pal;
    Int s, t, k, k_min, a0;
    QuadraticSurd alpha;
    Int poly_linear, poly_constant;
};

ConstructionResult construct(const Palindrome& pal, const Int& k, const Int& a0);

// Dual-route check of a construction: the prescribed expansion
// [a0; {a1..an, s}] in canonical form against the direct expansion of alpha.
// `collapsed` is true when the minimal period is shorter than n+1, i.e. the
// prescribed period is a repetition of a smaller block.
struct ConstructionCheck {
    CFExpansion prescribed;
    CFExpansion expansion;
    bool matches;
    bool collapsed;
};

ConstructionCheck check_construction(const ConstructionResult& r);

// Residue class value + modulus, value normalized to [0, modulus).
struct ResidueClass {
    Int value, modulus;
};

// The class of s values admissible for the palindrome:
// (-1)^n s = A(n-1) B(n-1) (mod An).
ResidueClass admissible_s(const Palindrome& pal);

// Whether [a0; {a1..an, s}] is an algebraic integer for this s. Only the
// fractional part decides integrality, so a0 does not affect the result.
bool is_algebraic_integer(const Palindrome& pal, const Int& s, const Int& a0 = 0);

/// Solvability of sqrt(D) = [a0; {a1..an, 2a0}] for the palindrome:
/// possible iff B(n-1) is even, or B(n-1) is odd and Bn is even. When
/// possible, a0 ranges over a residue class solving
/// 2 a0 = (-1)^n A(n-1) B(n-1) (mod An).
struct SqrtAdmissibility {
    bool possible;
    std::optional<ResidueClass> a0_class;
};

SqrtAdmissibility sqrt_admissibility(const Palindrome& pal);

struct SqrtFamilyRow {
    Int a0, d, k, t;
};

// The `count` smallest a0 >= 1 in the admissible class, each with its D.
std::vector<SqrtFamilyRow> sqrt_family(const Palindrome& pal, std::size_t count);

}  // namespace palcf
