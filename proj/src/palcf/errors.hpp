#pragma once

#include <stdexcept>
#include <string>

namespace palcf {

enum class Errc {
    parse,
    zero_denominator,
    square_discriminant,
    rational_root,
    empty_word,
    not_palindrome,
    k_too_small,
    not_admissible,
    parity,
    domain,
    precondition,
    no_solution,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void check(bool ok, Errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

}  // namespace palcf
