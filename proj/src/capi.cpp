#include "palcf.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "palcf/cf.hpp"
#include "palcf/errors.hpp"
#include "palcf/palindrome.hpp"
#include "palcf/pell.hpp"
#include "palcf/raney.hpp"
#include "palcf/surd.hpp"
#include "palcf/verify.hpp"

using palcf::Errc;
using palcf::Int;

struct palcf_surd {
    palcf::QuadraticSurd v;
};
struct palcf_cf {
    palcf::CFExpansion v;
};
struct palcf_construction {
    palcf::ConstructionResult r;
    palcf::ConstructionCheck chk;
};
struct palcf_beta {
    palcf::BetaResult r;
    palcf::CFExpansion oracle;
    bool verified;
};
struct palcf_pell {
    palcf::PellResult r;
    bool verified;
};
struct palcf_family {
    struct Row {
        palcf::SqrtFamilyRow row;
        palcf::CFExpansion period;
        bool verified;
    };
    std::vector<Row> rows;
};
struct palcf_report {
    palcf::VerificationReport r;
};

namespace {

thread_local std::string g_error;

void set_error(const char* what) { g_error = what ? what : ""; }

palcf_status map_status(Errc code) {
    switch (code) {
        case Errc::parse: return PALCF_ERR_PARSE;
        case Errc::zero_denominator: return PALCF_ERR_ZERO_DENOMINATOR;
        case Errc::square_discriminant: return PALCF_ERR_SQUARE_DISCRIMINANT;
        case Errc::rational_root: return PALCF_ERR_RATIONAL_ROOT;
        case Errc::empty_word: return PALCF_ERR_EMPTY_WORD;
        case Errc::not_palindrome: return PALCF_ERR_NOT_PALINDROME;
        case Errc::k_too_small: return PALCF_ERR_K_TOO_SMALL;
        case Errc::not_admissible: return PALCF_ERR_NOT_ADMISSIBLE;
        case Errc::parity: return PALCF_ERR_PARITY;
        case Errc::domain: return PALCF_ERR_DOMAIN;
        case Errc::precondition: return PALCF_ERR_PRECONDITION;
        case Errc::no_solution: return PALCF_ERR_NO_SOLUTION;
        case Errc::internal: return PALCF_ERR_INTERNAL;
    }
    return PALCF_ERR_INTERNAL;
}

template <typename F>
palcf_status guarded(F&& f) {
    try {
        f();
        return PALCF_OK;
    } catch (const palcf::Error& e) {
        set_error(e.what());
        return map_status(e.code());
    } catch (const std::exception& e) {
        set_error(e.what());
        return PALCF_ERR_INTERNAL;
    }
}

char* dup_str(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Int parse(const char* text) {
    palcf::check(text != nullptr, Errc::parse, "missing integer argument");
    return palcf::parse_int(text);
}

long long parse_length(const char* text) {
    Int v = parse(text);
    palcf::check(v >= 1 && v <= 1000000, Errc::domain,
                 "word length out of range");
    return v.convert_to<long long>();
}

std::vector<Int> parse_word(const char* const* word, size_t n) {
    palcf::check(word != nullptr || n == 0, Errc::parse, "missing word");
    std::vector<Int> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(parse(word[i]));
    return out;
}

palcf::Palindrome parse_palindrome(const char* const* word, size_t n) {
    return palcf::make_palindrome(parse_word(word, n));
}

}  // namespace

extern "C" {

const char* palcf_last_error(void) { return g_error.c_str(); }

void palcf_string_free(char* s) { std::free(s); }

/* ---- surds and expansions ---- */

palcf_status palcf_surd_new(const char* p, const char* q, const char* d,
                            palcf_surd** out) {
    return guarded([&] {
        *out = new palcf_surd{palcf::make_surd(parse(p), parse(q), parse(d))};
    });
}

void palcf_surd_free(palcf_surd* s) { delete s; }

char* palcf_surd_p(const palcf_surd* s) { return dup_str(s->v.p.str()); }
char* palcf_surd_q(const palcf_surd* s) { return dup_str(s->v.q.str()); }
char* palcf_surd_d(const palcf_surd* s) { return dup_str(s->v.d.str()); }
char* palcf_surd_format(const palcf_surd* s) {
    return dup_str(palcf::format_surd(s->v));
}

palcf_status palcf_cf_new(const char* const* preperiod, size_t preperiod_len,
                          const char* const* period, size_t period_len,
                          palcf_cf** out) {
    return guarded([&] {
        *out = new palcf_cf{palcf::make_cf(parse_word(preperiod, preperiod_len),
                                           parse_word(period, period_len))};
    });
}

void palcf_cf_free(palcf_cf* cf) { delete cf; }

size_t palcf_cf_preperiod_len(const palcf_cf* cf) {
    return cf->v.preperiod.size();
}
size_t palcf_cf_period_len(const palcf_cf* cf) { return cf->v.period.size(); }
char* palcf_cf_preperiod_at(const palcf_cf* cf, size_t i) {
    return dup_str(cf->v.preperiod[i].str());
}
char* palcf_cf_period_at(const palcf_cf* cf, size_t i) {
    return dup_str(cf->v.period[i].str());
}
char* palcf_cf_format(const palcf_cf* cf) {
    return dup_str(palcf::format_cf(cf->v));
}
int palcf_cf_equal(const palcf_cf* a, const palcf_cf* b) {
    return a->v == b->v ? 1 : 0;
}

palcf_status palcf_surd_expand(const palcf_surd* s, palcf_cf** out) {
    return guarded([&] { *out = new palcf_cf{palcf::expand(s->v)}; });
}

palcf_status palcf_cf_eval(const palcf_cf* cf, palcf_surd** out) {
    return guarded([&] { *out = new palcf_surd{palcf::eval_periodic(cf->v)}; });
}

/* ---- palindromic periods ---- */

palcf_status palcf_k_min(const char* const* word, size_t n, char** out) {
    return guarded([&] {
        *out = dup_str(palcf::k_min(parse_palindrome(word, n)).str());
    });
}

palcf_status palcf_admissible_s(const char* const* word, size_t n,
                                char** value, char** modulus) {
    return guarded([&] {
        palcf::ResidueClass cls = palcf::admissible_s(parse_palindrome(word, n));
        *value = dup_str(cls.value.str());
        *modulus = dup_str(cls.modulus.str());
    });
}

palcf_status palcf_is_algebraic_integer(const char* const* word, size_t n,
                                        const char* s, int* out) {
    return guarded([&] {
        *out = palcf::is_algebraic_integer(parse_palindrome(word, n), parse(s))
                   ? 1
                   : 0;
    });
}

palcf_status palcf_construct(const char* const* word, size_t n, const char* k,
                             const char* a0, palcf_construction** out) {
    return guarded([&] {
        palcf::ConstructionResult r =
            palcf::construct(parse_palindrome(word, n), parse(k), parse(a0));
        palcf::ConstructionCheck chk = palcf::check_construction(r);
        *out = new palcf_construction{std::move(r), std::move(chk)};
    });
}

void palcf_construction_free(palcf_construction* c) { delete c; }

char* palcf_construction_s(const palcf_construction* c) {
    return dup_str(c->r.s.str());
}
char* palcf_construction_t(const palcf_construction* c) {
    return dup_str(c->r.t.str());
}
char* palcf_construction_k(const palcf_construction* c) {
    return dup_str(c->r.k.str());
}
char* palcf_construction_k_min(const palcf_construction* c) {
    return dup_str(c->r.k_min.str());
}
char* palcf_construction_a0(const palcf_construction* c) {
    return dup_str(c->r.a0.str());
}
char* palcf_construction_poly_linear(const palcf_construction* c) {
    return dup_str(c->r.poly_linear.str());
}
char* palcf_construction_poly_constant(const palcf_construction* c) {
    return dup_str(c->r.poly_constant.str());
}
palcf_status palcf_construction_alpha(const palcf_construction* c,
                                      palcf_surd** out) {
    return guarded([&] { *out = new palcf_surd{c->r.alpha}; });
}
palcf_status palcf_construction_prescribed(const palcf_construction* c,
                                           palcf_cf** out) {
    return guarded([&] { *out = new palcf_cf{c->chk.prescribed}; });
}
palcf_status palcf_construction_expansion(const palcf_construction* c,
                                          palcf_cf** out) {
    return guarded([&] { *out = new palcf_cf{c->chk.expansion}; });
}
int palcf_construction_matches(const palcf_construction* c) {
    return c->chk.matches ? 1 : 0;
}
int palcf_construction_collapsed(const palcf_construction* c) {
    return c->chk.collapsed ? 1 : 0;
}

palcf_status palcf_sqrt_admissibility(const char* const* word, size_t n,
                                      int* possible, char** value,
                                      char** modulus) {
    return guarded([&] {
        palcf::SqrtAdmissibility adm =
            palcf::sqrt_admissibility(parse_palindrome(word, n));
        *possible = adm.possible ? 1 : 0;
        if (adm.possible) {
            *value = dup_str(adm.a0_class->value.str());
            *modulus = dup_str(adm.a0_class->modulus.str());
        }
    });
}

palcf_status palcf_sqrt_family(const char* const* word, size_t n, size_t count,
                               palcf_family** out) {
    return guarded([&] {
        palcf::Palindrome pal = parse_palindrome(word, n);
        std::vector<palcf::SqrtFamilyRow> rows = palcf::sqrt_family(pal, count);
        auto f = std::make_unique<palcf_family>();
        f->rows.reserve(rows.size());
        for (palcf::SqrtFamilyRow& row : rows) {
            std::vector<Int> period = pal.word;
            period.push_back(2 * row.a0);
            palcf::CFExpansion want =
                palcf::make_cf({row.a0}, std::move(period));
            palcf::CFExpansion got =
                palcf::expand(palcf::make_surd(0, 1, row.d));
            bool verified = got == want;
            f->rows.push_back(
                palcf_family::Row{std::move(row), std::move(got), verified});
        }
        *out = f.release();
    });
}

void palcf_family_free(palcf_family* f) { delete f; }

size_t palcf_family_size(const palcf_family* f) { return f->rows.size(); }
char* palcf_family_a0(const palcf_family* f, size_t i) {
    return dup_str(f->rows[i].row.a0.str());
}
char* palcf_family_d(const palcf_family* f, size_t i) {
    return dup_str(f->rows[i].row.d.str());
}
char* palcf_family_k(const palcf_family* f, size_t i) {
    return dup_str(f->rows[i].row.k.str());
}
char* palcf_family_t(const palcf_family* f, size_t i) {
    return dup_str(f->rows[i].row.t.str());
}
palcf_status palcf_family_period(const palcf_family* f, size_t i,
                                 palcf_cf** out) {
    return guarded([&] { *out = new palcf_cf{f->rows.at(i).period}; });
}
int palcf_family_verified(const palcf_family* f, size_t i) {
    return f->rows[i].verified ? 1 : 0;
}

/* ---- constant words ---- */

palcf_status palcf_beta_new(const char* n, const char* m, const char* k,
                            palcf_beta** out) {
    return guarded([&] {
        palcf::BetaResult r =
            palcf::beta(parse_length(n), parse(m), parse(k));
        palcf::CFExpansion oracle =
            palcf::expand(palcf::make_surd(0, 1, r.d));
        bool verified = r.cf == oracle;
        *out = new palcf_beta{std::move(r), std::move(oracle), verified};
    });
}

void palcf_beta_free(palcf_beta* b) { delete b; }

char* palcf_beta_d(const palcf_beta* b) { return dup_str(b->r.d.str()); }
char* palcf_beta_s(const palcf_beta* b) { return dup_str(b->r.s.str()); }
const char* palcf_beta_branch(const palcf_beta* b) {
    return b->r.branch.c_str();
}
palcf_status palcf_beta_cf(const palcf_beta* b, palcf_cf** out) {
    return guarded([&] { *out = new palcf_cf{b->r.cf}; });
}
palcf_status palcf_beta_oracle_cf(const palcf_beta* b, palcf_cf** out) {
    return guarded([&] { *out = new palcf_cf{b->oracle}; });
}
int palcf_beta_verified(const palcf_beta* b) { return b->verified ? 1 : 0; }

/* ---- Pell equations ---- */

palcf_status palcf_pell_oracle(const char* d, int kind, int* exists, char** x,
                               char** y) {
    return guarded([&] {
        auto sol = palcf::pell_oracle(parse(d), kind);
        *exists = sol.has_value() ? 1 : 0;
        if (sol) {
            *x = dup_str(sol->x.str());
            *y = dup_str(sol->y.str());
        }
    });
}

palcf_status palcf_pell_lift(const char* u, const char* v, const char* d,
                             int sign, char** x, char** y) {
    return guarded([&] {
        palcf::check(sign == 1 || sign == -1, Errc::domain,
                     "sign must be +1 or -1");
        palcf::PellSolution sol =
            sign == 1 ? palcf::lift_pos4(parse(u), parse(v), parse(d))
                      : palcf::lift_neg4(parse(u), parse(v), parse(d));
        *x = dup_str(sol.x.str());
        *y = dup_str(sol.y.str());
    });
}

palcf_status palcf_pell_new(const char* n, const char* m, const char* k,
                            int sign, palcf_pell** out) {
    return guarded([&] {
        palcf::check(sign == 1 || sign == -1, Errc::domain,
                     "sign must be +1 or -1");
        long long len = parse_length(n);
        palcf::PellResult r =
            sign == 1 ? palcf::fundamental_positive(len, parse(m), parse(k))
                      : palcf::fundamental_negative(len, parse(m), parse(k));
        auto oracle = palcf::pell_oracle(r.d, sign);
        bool verified = oracle.has_value() && *oracle == r.sol;
        *out = new palcf_pell{std::move(r), verified};
    });
}

void palcf_pell_free(palcf_pell* p) { delete p; }

char* palcf_pell_d(const palcf_pell* p) { return dup_str(p->r.d.str()); }
char* palcf_pell_s(const palcf_pell* p) { return dup_str(p->r.s.str()); }
char* palcf_pell_t(const palcf_pell* p) { return dup_str(p->r.t.str()); }
char* palcf_pell_x(const palcf_pell* p) { return dup_str(p->r.sol.x.str()); }
char* palcf_pell_y(const palcf_pell* p) { return dup_str(p->r.sol.y.str()); }
const char* palcf_pell_branch(const palcf_pell* p) {
    return p->r.branch.c_str();
}
int palcf_pell_verified(const palcf_pell* p) { return p->verified ? 1 : 0; }

/* ---- randomized cross-checks ---- */

palcf_status palcf_verify(const char* suite, size_t budget, uint64_t seed,
                          long long max_n, long long max_m, long long max_k,
                          palcf_report** out) {
    return guarded([&] {
        palcf::check(suite != nullptr, Errc::domain, "missing suite name");
        palcf::VerifyOptions opts;
        if (max_n > 0) opts.max_n = max_n;
        if (max_m > 0) opts.max_m = max_m;
        if (max_k > 0) opts.max_k = max_k;
        *out = new palcf_report{palcf::run_suite(suite, budget, seed, opts)};
    });
}

void palcf_report_free(palcf_report* r) { delete r; }

size_t palcf_report_total(const palcf_report* r) { return r->r.total; }
size_t palcf_report_passed(const palcf_report* r) { return r->r.passed; }
size_t palcf_report_failure_count(const palcf_report* r) {
    return r->r.failures.size();
}
char* palcf_report_failure_input(const palcf_report* r, size_t i) {
    return dup_str(r->r.failures[i].input);
}
char* palcf_report_failure_expected(const palcf_report* r, size_t i) {
    return dup_str(r->r.failures[i].expected);
}
char* palcf_report_failure_got(const palcf_report* r, size_t i) {
    return dup_str(r->r.failures[i].got);
}

}  // extern "C"
