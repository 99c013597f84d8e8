#pragma once

#include <string>
#include <vector>

#include "palcf/cf.hpp"
#include "palcf/surd.hpp"

namespace palcf {

enum class Letter { R, L };

struct Run {
    Letter letter;
    Int count;
    bool operator==(const Run&) const = default;
};

/// Eventually periodic {R,L}-word: pre once, then cycle forever. The word
/// R^(e0) L^(e1) R^(e2)... encodes [e0; e1, e2, ...]; a leading L-run means
/// the integer part is 0. Valid words have counts >= 1 and alternate letters
/// when read as an infinite stream (merging across the cycle boundary).
struct LRWord {
    std::vector<Run> pre;
    std::vector<Run> cycle;
    bool operator==(const LRWord&) const = default;
};

// Merge equal-letter neighbors, drop empty runs, and shift the cycle start
// so that both the cycle wrap and the pre/cycle boundary change letters.
LRWord normalize_word(LRWord w);

// Word of a purely periodic value in (0,1): preperiod must be exactly [0].
// An odd-length period is doubled first so the cycle keeps letter parity.
LRWord cf_to_word(const CFExpansion& cf);

// Word of twice the encoded value, by pushing the doubling state machine
// through the runs. The output cycle is found by recurrence of
// (machine state, position in the input cycle).
LRWord double_word(const LRWord& word);

// Decode back to a continued fraction in canonical form.
CFExpansion word_to_cf(const LRWord& word);

struct BetaResult {
    Int d, s;
    CFExpansion cf;
    std::string branch;
};

/// Expansion of sqrt(s^2 - 4t) for the constant-word data (n, m, k):
/// closed forms for even m (branch names by dispatch: even-n-even-k,
/// even-n-odd-k, even-n-odd-k-m2, odd-n), transduction otherwise (generic).
BetaResult beta(long long n, const Int& m, const Int& k);

}  // namespace palcf
