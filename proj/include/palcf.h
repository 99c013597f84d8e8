#ifndef PALCF_H
#define PALCF_H

/* C interface to the periodic continued fraction library.
 *
 * Conventions:
 *   - Integers cross this boundary as decimal strings (they routinely
 *     exceed 64-bit range). Returned strings are heap-allocated; release
 *     them with palcf_string_free.
 *   - Functions that can fail return a palcf_status and write their
 *     results through out parameters, which are left untouched on error.
 *     palcf_last_error() describes the most recent failure on the calling
 *     thread.
 *   - Accessors on a valid handle cannot fail. Passing a null or freed
 *     handle is undefined behavior.
 *   - Every new/free pair must balance; handles are independent of
 *     each other and safe to use from multiple threads once created.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum palcf_status {
    PALCF_OK = 0,
    PALCF_ERR_PARSE,
    PALCF_ERR_ZERO_DENOMINATOR,
    PALCF_ERR_SQUARE_DISCRIMINANT,
    PALCF_ERR_RATIONAL_ROOT,
    PALCF_ERR_EMPTY_WORD,
    PALCF_ERR_NOT_PALINDROME,
    PALCF_ERR_K_TOO_SMALL,
    PALCF_ERR_NOT_ADMISSIBLE,
    PALCF_ERR_PARITY,
    PALCF_ERR_DOMAIN,
    PALCF_ERR_PRECONDITION,
    PALCF_ERR_NO_SOLUTION,
    PALCF_ERR_INTERNAL
} palcf_status;

/* Message for the last failing call on this thread; empty string if none. */
const char* palcf_last_error(void);

void palcf_string_free(char* s);

typedef struct palcf_surd palcf_surd;
typedef struct palcf_cf palcf_cf;
typedef struct palcf_construction palcf_construction;
typedef struct palcf_beta palcf_beta;
typedef struct palcf_pell palcf_pell;
typedef struct palcf_family palcf_family;
typedef struct palcf_report palcf_report;

/* ---- quadratic surds and their expansions ---- */

/* (p + sqrt(d)) / q, canonicalized so q divides d - p*p. */
palcf_status palcf_surd_new(const char* p, const char* q, const char* d,
                            palcf_surd** out);
void palcf_surd_free(palcf_surd* s);

char* palcf_surd_p(const palcf_surd* s);
char* palcf_surd_q(const palcf_surd* s);
char* palcf_surd_d(const palcf_surd* s);
char* palcf_surd_format(const palcf_surd* s);

/* Continued fraction with the given preperiod and period (canonicalized).
 * An empty preperiod denotes a purely periodic expansion. */
palcf_status palcf_cf_new(const char* const* preperiod, size_t preperiod_len,
                          const char* const* period, size_t period_len,
                          palcf_cf** out);
void palcf_cf_free(palcf_cf* cf);

size_t palcf_cf_preperiod_len(const palcf_cf* cf);
size_t palcf_cf_period_len(const palcf_cf* cf);
char* palcf_cf_preperiod_at(const palcf_cf* cf, size_t i);
char* palcf_cf_period_at(const palcf_cf* cf, size_t i);
char* palcf_cf_format(const palcf_cf* cf);
int palcf_cf_equal(const palcf_cf* a, const palcf_cf* b);

/* Full expansion of a surd; preperiod and period come out minimal. */
palcf_status palcf_surd_expand(const palcf_surd* s, palcf_cf** out);
/* Exact value of an eventually periodic expansion. */
palcf_status palcf_cf_eval(const palcf_cf* cf, palcf_surd** out);

/* ---- palindromic periods ---- */

/* Smallest admissible k for the palindromic word. */
palcf_status palcf_k_min(const char* const* word, size_t n, char** out);

/* Residue class of admissible s values: *value mod *modulus. */
palcf_status palcf_admissible_s(const char* const* word, size_t n,
                                char** value, char** modulus);

/* Whether a0 + [0; {word, s}] is an algebraic integer (1 or 0). */
palcf_status palcf_is_algebraic_integer(const char* const* word, size_t n,
                                        const char* s, int* out);

/* Runs the construction for (word, k, a0) and checks it against the
 * direct expansion. */
palcf_status palcf_construct(const char* const* word, size_t n, const char* k,
                             const char* a0, palcf_construction** out);
void palcf_construction_free(palcf_construction* c);

char* palcf_construction_s(const palcf_construction* c);
char* palcf_construction_t(const palcf_construction* c);
char* palcf_construction_k(const palcf_construction* c);
char* palcf_construction_k_min(const palcf_construction* c);
char* palcf_construction_a0(const palcf_construction* c);
/* Coefficients of the monic minimal polynomial x^2 + L x + C. */
char* palcf_construction_poly_linear(const palcf_construction* c);
char* palcf_construction_poly_constant(const palcf_construction* c);
palcf_status palcf_construction_alpha(const palcf_construction* c,
                                      palcf_surd** out);
/* The prescribed expansion [a0; {word, s}] and the direct expansion of
 * alpha, both canonical. */
palcf_status palcf_construction_prescribed(const palcf_construction* c,
                                           palcf_cf** out);
palcf_status palcf_construction_expansion(const palcf_construction* c,
                                          palcf_cf** out);
int palcf_construction_matches(const palcf_construction* c);
int palcf_construction_collapsed(const palcf_construction* c);

/* Solvability of sqrt(D) = [a0; {word, 2 a0}]. *possible is 1 or 0; the
 * class outputs are written only when possible. */
palcf_status palcf_sqrt_admissibility(const char* const* word, size_t n,
                                      int* possible, char** value,
                                      char** modulus);

/* The `count` smallest family members (a0, D); each row carries its own
 * verified expansion of sqrt(D). */
palcf_status palcf_sqrt_family(const char* const* word, size_t n, size_t count,
                               palcf_family** out);
void palcf_family_free(palcf_family* f);

size_t palcf_family_size(const palcf_family* f);
char* palcf_family_a0(const palcf_family* f, size_t i);
char* palcf_family_d(const palcf_family* f, size_t i);
char* palcf_family_k(const palcf_family* f, size_t i);
char* palcf_family_t(const palcf_family* f, size_t i);
palcf_status palcf_family_period(const palcf_family* f, size_t i,
                                 palcf_cf** out);
int palcf_family_verified(const palcf_family* f, size_t i);

/* ---- constant words: sqrt(s^2 - 4t) expansions ---- */

/* Expansion of sqrt(D) for the length-n constant word m with parameter k.
 * The result is cross-checked against the direct expansion at creation. */
palcf_status palcf_beta_new(const char* n, const char* m, const char* k,
                            palcf_beta** out);
void palcf_beta_free(palcf_beta* b);

char* palcf_beta_d(const palcf_beta* b);
char* palcf_beta_s(const palcf_beta* b);
/* Dispatch tag; valid while the handle lives. */
const char* palcf_beta_branch(const palcf_beta* b);
palcf_status palcf_beta_cf(const palcf_beta* b, palcf_cf** out);
palcf_status palcf_beta_oracle_cf(const palcf_beta* b, palcf_cf** out);
int palcf_beta_verified(const palcf_beta* b);

/* ---- Pell equations ---- */

/* Minimal solution of X^2 - D Y^2 = kind for kind in {1, -1, 4, -4}.
 * *exists is 1 with x, y written, or 0 when the equation has no solution. */
palcf_status palcf_pell_oracle(const char* d, int kind, int* exists, char** x,
                               char** y);

/* Lift a minimal solution of X^2 - D Y^2 = sign*4 to sign*1;
 * sign is +1 or -1. */
palcf_status palcf_pell_lift(const char* u, const char* v, const char* d,
                             int sign, char** x, char** y);

/* Fundamental solution of X^2 - D Y^2 = sign for D from the constant-word
 * data (n, m, k); sign is +1 or -1. Minimality is cross-checked against
 * the convergent search at creation. */
palcf_status palcf_pell_new(const char* n, const char* m, const char* k,
                            int sign, palcf_pell** out);
void palcf_pell_free(palcf_pell* p);

char* palcf_pell_d(const palcf_pell* p);
char* palcf_pell_s(const palcf_pell* p);
char* palcf_pell_t(const palcf_pell* p);
char* palcf_pell_x(const palcf_pell* p);
char* palcf_pell_y(const palcf_pell* p);
const char* palcf_pell_branch(const palcf_pell* p);
int palcf_pell_verified(const palcf_pell* p);

/* ---- randomized cross-checks ---- */

/* suite: all | palindrome | beta | pell | raney. Runs `budget` cases per
 * suite, deterministically for a given seed. max_n/max_m/max_k bound the
 * parameter ranges; pass 0 or negative for the defaults (12, 12, 10000). */
palcf_status palcf_verify(const char* suite, size_t budget, uint64_t seed,
                          long long max_n, long long max_m, long long max_k,
                          palcf_report** out);
void palcf_report_free(palcf_report* r);

size_t palcf_report_total(const palcf_report* r);
size_t palcf_report_passed(const palcf_report* r);
size_t palcf_report_failure_count(const palcf_report* r);
char* palcf_report_failure_input(const palcf_report* r, size_t i);
char* palcf_report_failure_expected(const palcf_report* r, size_t i);
char* palcf_report_failure_got(const palcf_report* r, size_t i);

#ifdef __cplusplus
}
#endif

#endif /* PALCF_H */
