// Command-line frontend. Talks to the library exclusively through the C
// interface; every number is carried as a decimal string.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "palcf.h"

namespace {

using nlohmann::json;

struct StrFree {
    void operator()(char* p) const { palcf_string_free(p); }
};

std::string take(char* p) {
    std::unique_ptr<char, StrFree> guard(p);
    return p ? std::string(p) : std::string();
}

template <typename T, void (*F)(T*)>
struct HandleFree {
    void operator()(T* p) const { F(p); }
};
using CfPtr = std::unique_ptr<palcf_cf, HandleFree<palcf_cf, palcf_cf_free>>;
using SurdPtr =
    std::unique_ptr<palcf_surd, HandleFree<palcf_surd, palcf_surd_free>>;
using ConstructionPtr =
    std::unique_ptr<palcf_construction,
                    HandleFree<palcf_construction, palcf_construction_free>>;
using BetaPtr =
    std::unique_ptr<palcf_beta, HandleFree<palcf_beta, palcf_beta_free>>;
using PellPtr =
    std::unique_ptr<palcf_pell, HandleFree<palcf_pell, palcf_pell_free>>;
using FamilyPtr =
    std::unique_ptr<palcf_family, HandleFree<palcf_family, palcf_family_free>>;
using ReportPtr =
    std::unique_ptr<palcf_report, HandleFree<palcf_report, palcf_report_free>>;

const char* status_label(palcf_status st) {
    switch (st) {
        case PALCF_OK: return "Ok";
        case PALCF_ERR_PARSE: return "Parse";
        case PALCF_ERR_ZERO_DENOMINATOR: return "ZeroDenominator";
        case PALCF_ERR_SQUARE_DISCRIMINANT: return "DSquare";
        case PALCF_ERR_RATIONAL_ROOT: return "RationalRoot";
        case PALCF_ERR_EMPTY_WORD: return "EmptyWord";
        case PALCF_ERR_NOT_PALINDROME: return "NotPalindrome";
        case PALCF_ERR_K_TOO_SMALL: return "KTooSmall";
        case PALCF_ERR_NOT_ADMISSIBLE: return "NotAdmissible";
        case PALCF_ERR_PARITY: return "ParityViolated";
        case PALCF_ERR_DOMAIN: return "Domain";
        case PALCF_ERR_PRECONDITION: return "PreconditionViolated";
        case PALCF_ERR_NO_SOLUTION: return "NoSolution";
        case PALCF_ERR_INTERNAL: return "Internal";
    }
    return "Internal";
}

struct Emit {
    std::string format = "text";  // text | json
    bool compact = false;         // batch rows stay on one line
};

void print_json(const Emit& e, const json& record) {
    if (e.compact)
        std::cout << record.dump() << "\n";
    else
        std::cout << record.dump(2) << "\n";
}

json error_record(const std::string& command, const json& input,
                  const std::string& code, const std::string& message) {
    return json{{"command", command}, {"input", input},  {"result", nullptr},
                {"verified", false},  {"branch", nullptr},
                {"error", json{{"code", code}, {"message", message}}}};
}

int emit_error(const Emit& e, const std::string& command, const json& input,
               const std::string& code, const std::string& message) {
    if (e.format == "json")
        print_json(e, error_record(command, input, code, message));
    else
        std::cout << "error: " << code << ": " << message << "\n";
    return 2;
}

int emit_status(const Emit& e, const std::string& command, const json& input,
                palcf_status st) {
    return emit_error(e, command, input, status_label(st), palcf_last_error());
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::vector<const char*> c_view(const std::vector<std::string>& word) {
    std::vector<const char*> out;
    out.reserve(word.size());
    for (const std::string& w : word) out.push_back(w.c_str());
    return out;
}

json word_json(const std::vector<std::string>& word) {
    json out = json::array();
    for (const std::string& w : word) out.push_back(w);
    return out;
}

std::string word_text(const std::vector<std::string>& word) {
    std::string out = "(";
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ",";
        out += word[i];
    }
    return out + ")";
}

json cf_json(const palcf_cf* cf) {
    json pre = json::array(), per = json::array();
    for (std::size_t i = 0; i < palcf_cf_preperiod_len(cf); ++i)
        pre.push_back(take(palcf_cf_preperiod_at(cf, i)));
    for (std::size_t i = 0; i < palcf_cf_period_len(cf); ++i)
        per.push_back(take(palcf_cf_period_at(cf, i)));
    return json{{"preperiod", pre},
                {"period", per},
                {"formatted", take(palcf_cf_format(cf))}};
}

// Monic quadratic as readable text: x^2 [+-] Lx [+-] C.
std::string poly_text(const std::string& lin, const std::string& con) {
    std::string out = "x^2";
    auto term = [&out](const std::string& coeff, const char* sym) {
        if (coeff == "0") return;
        bool neg = !coeff.empty() && coeff[0] == '-';
        std::string mag = neg ? coeff.substr(1) : coeff;
        out += neg ? " - " : " + ";
        if (mag != "1" || sym[0] == '\0') out += mag;
        out += sym;
    };
    term(lin, "x");
    term(con, "");
    return out;
}

const char* yesno(bool v) { return v ? "yes" : "no"; }

// ---- construct ----

int run_construct(const std::vector<std::string>& word, const std::string& k,
                  const std::string& a0, const Emit& e) {
    json input{{"word", word_json(word)}, {"k", k}, {"a0", a0}};
    auto cw = c_view(word);
    palcf_construction* raw = nullptr;
    palcf_status st = palcf_construct(cw.data(), cw.size(), k.c_str(),
                                      a0.c_str(), &raw);
    if (st != PALCF_OK) return emit_status(e, "construct", input, st);
    ConstructionPtr c(raw);

    std::string s = take(palcf_construction_s(c.get()));
    std::string t = take(palcf_construction_t(c.get()));
    std::string kmin = take(palcf_construction_k_min(c.get()));
    std::string lin = take(palcf_construction_poly_linear(c.get()));
    std::string con = take(palcf_construction_poly_constant(c.get()));
    bool matches = palcf_construction_matches(c.get()) != 0;
    bool collapsed = palcf_construction_collapsed(c.get()) != 0;

    palcf_surd* alpha_raw = nullptr;
    if (palcf_construction_alpha(c.get(), &alpha_raw) != PALCF_OK)
        return emit_status(e, "construct", input, PALCF_ERR_INTERNAL);
    SurdPtr alpha(alpha_raw);
    palcf_cf* pre_raw = nullptr;
    palcf_cf* exp_raw = nullptr;
    if (palcf_construction_prescribed(c.get(), &pre_raw) != PALCF_OK)
        return emit_status(e, "construct", input, PALCF_ERR_INTERNAL);
    CfPtr prescribed(pre_raw);
    if (palcf_construction_expansion(c.get(), &exp_raw) != PALCF_OK)
        return emit_status(e, "construct", input, PALCF_ERR_INTERNAL);
    CfPtr expansion(exp_raw);

    if (e.format == "json") {
        json result{{"s", s},
                    {"t", t},
                    {"k_min", kmin},
                    {"poly", json{{"linear", lin}, {"constant", con}}},
                    {"alpha", json{{"p", take(palcf_surd_p(alpha.get()))},
                                   {"q", take(palcf_surd_q(alpha.get()))},
                                   {"d", take(palcf_surd_d(alpha.get()))},
                                   {"formatted",
                                    take(palcf_surd_format(alpha.get()))}}},
                    {"prescribed", cf_json(prescribed.get())},
                    {"expansion", cf_json(expansion.get())},
                    {"collapsed", collapsed}};
        print_json(e, json{{"command", "construct"},
                           {"input", input},
                           {"result", result},
                           {"verified", matches},
                           {"branch", nullptr}});
    } else if (e.compact) {
        std::cout << "word=" << word_text(word) << " k=" << k << " a0=" << a0
                  << " s=" << s << " t=" << t << " alpha="
                  << take(palcf_surd_format(alpha.get()))
                  << " match=" << yesno(matches)
                  << " collapsed=" << yesno(collapsed) << "\n";
    } else {
        std::cout << "word: " << word_text(word) << "\n"
                  << "k: " << k << " (k_min: " << kmin << ")\n"
                  << "a0: " << a0 << "\n"
                  << "s: " << s << "\n"
                  << "t: " << t << "\n"
                  << "polynomial: " << poly_text(lin, con) << "\n"
                  << "alpha: " << take(palcf_surd_format(alpha.get())) << "\n"
                  << "prescribed: " << take(palcf_cf_format(prescribed.get()))
                  << "\n"
                  << "expansion: " << take(palcf_cf_format(expansion.get()))
                  << "\n"
                  << "match: " << yesno(matches) << "\n"
                  << "collapsed: " << yesno(collapsed) << "\n";
    }
    return matches ? 0 : 1;
}

// ---- beta ----

int run_beta(const std::string& n, const std::string& m, const std::string& k,
             const Emit& e) {
    json input{{"n", n}, {"m", m}, {"k", k}};
    palcf_beta* raw = nullptr;
    palcf_status st = palcf_beta_new(n.c_str(), m.c_str(), k.c_str(), &raw);
    if (st != PALCF_OK) return emit_status(e, "beta", input, st);
    BetaPtr b(raw);

    std::string d = take(palcf_beta_d(b.get()));
    std::string s = take(palcf_beta_s(b.get()));
    std::string branch = palcf_beta_branch(b.get());
    bool verified = palcf_beta_verified(b.get()) != 0;
    palcf_cf* cf_raw = nullptr;
    if (palcf_beta_cf(b.get(), &cf_raw) != PALCF_OK)
        return emit_status(e, "beta", input, PALCF_ERR_INTERNAL);
    CfPtr cf(cf_raw);

    if (e.format == "json") {
        json result{{"d", d},
                    {"s", s},
                    {"cf", cf_json(cf.get())},
                    {"period_length", palcf_cf_period_len(cf.get())}};
        if (!verified) {
            palcf_cf* oracle_raw = nullptr;
            if (palcf_beta_oracle_cf(b.get(), &oracle_raw) == PALCF_OK) {
                CfPtr oracle(oracle_raw);
                result["oracle"] = cf_json(oracle.get());
            }
        }
        print_json(e, json{{"command", "beta"},
                           {"input", input},
                           {"result", result},
                           {"verified", verified},
                           {"branch", branch}});
    } else if (e.compact) {
        std::cout << "n=" << n << " m=" << m << " k=" << k << " D=" << d
                  << " branch=" << branch << " verified=" << yesno(verified)
                  << " cf=" << take(palcf_cf_format(cf.get())) << "\n";
    } else {
        std::cout << "n: " << n << "  m: " << m << "  k: " << k << "\n"
                  << "s: " << s << "\n"
                  << "D: " << d << "\n"
                  << "branch: " << branch << "\n"
                  << "cf: " << take(palcf_cf_format(cf.get())) << "\n"
                  << "verified: " << yesno(verified) << "\n";
        if (!verified) {
            palcf_cf* oracle_raw = nullptr;
            if (palcf_beta_oracle_cf(b.get(), &oracle_raw) == PALCF_OK) {
                CfPtr oracle(oracle_raw);
                std::cout << "oracle: " << take(palcf_cf_format(oracle.get()))
                          << "\n";
            }
        }
    }
    return verified ? 0 : 1;
}

// ---- pell ----

int run_pell(const std::string& n, const std::string& m, const std::string& k,
             const std::string& sign, const Emit& e) {
    json input{{"n", n}, {"m", m}, {"k", k}, {"sign", sign}};
    int sg = 0;
    if (sign == "1" || sign == "+1")
        sg = 1;
    else if (sign == "-1")
        sg = -1;
    else
        return emit_error(e, "pell", input, "Parse",
                          "sign must be +1 or -1, got '" + sign + "'");

    palcf_pell* raw = nullptr;
    palcf_status st =
        palcf_pell_new(n.c_str(), m.c_str(), k.c_str(), sg, &raw);
    if (st != PALCF_OK) return emit_status(e, "pell", input, st);
    PellPtr p(raw);

    std::string d = take(palcf_pell_d(p.get()));
    std::string x = take(palcf_pell_x(p.get()));
    std::string y = take(palcf_pell_y(p.get()));
    std::string branch = palcf_pell_branch(p.get());
    bool verified = palcf_pell_verified(p.get()) != 0;

    if (e.format == "json") {
        json result{{"d", d},
                    {"s", take(palcf_pell_s(p.get()))},
                    {"t", take(palcf_pell_t(p.get()))},
                    {"x", x},
                    {"y", y}};
        print_json(e, json{{"command", "pell"},
                           {"input", input},
                           {"result", result},
                           {"verified", verified},
                           {"branch", branch}});
    } else if (e.compact) {
        std::cout << "n=" << n << " m=" << m << " k=" << k << " sign=" << sign
                  << " D=" << d << " x=" << x << " y=" << y
                  << " branch=" << branch << " verified=" << yesno(verified)
                  << "\n";
    } else {
        std::cout << "n: " << n << "  m: " << m << "  k: " << k << "\n"
                  << "equation: x^2 - " << d << " y^2 = " << (sg > 0 ? "1" : "-1")
                  << "\n"
                  << "D: " << d << "\n"
                  << "x: " << x << "\n"
                  << "y: " << y << "\n"
                  << "branch: " << branch << "\n"
                  << "verified: " << yesno(verified) << "\n";
    }
    return verified ? 0 : 1;
}

// ---- sqrt-family ----

int run_sqrt_family(const std::vector<std::string>& word, std::size_t count,
                    const Emit& e) {
    json input{{"word", word_json(word)}, {"count", std::to_string(count)}};
    if (count == 0)
        return emit_error(e, "sqrt-family", input, "Domain",
                          "count must be positive");
    auto cw = c_view(word);
    palcf_family* raw = nullptr;
    palcf_status st = palcf_sqrt_family(cw.data(), cw.size(), count, &raw);
    if (st != PALCF_OK) return emit_status(e, "sqrt-family", input, st);
    FamilyPtr f(raw);

    int possible = 0;
    char* cls_value = nullptr;
    char* cls_modulus = nullptr;
    st = palcf_sqrt_admissibility(cw.data(), cw.size(), &possible, &cls_value,
                                  &cls_modulus);
    if (st != PALCF_OK) return emit_status(e, "sqrt-family", input, st);
    std::string value = take(cls_value), modulus = take(cls_modulus);

    bool all_verified = true;
    json rows = json::array();
    std::vector<std::string> text_rows;
    for (std::size_t i = 0; i < palcf_family_size(f.get()); ++i) {
        std::string a0 = take(palcf_family_a0(f.get(), i));
        std::string d = take(palcf_family_d(f.get(), i));
        std::string kk = take(palcf_family_k(f.get(), i));
        std::string tt = take(palcf_family_t(f.get(), i));
        bool verified = palcf_family_verified(f.get(), i) != 0;
        all_verified = all_verified && verified;
        palcf_cf* cf_raw = nullptr;
        if (palcf_family_period(f.get(), i, &cf_raw) != PALCF_OK)
            return emit_status(e, "sqrt-family", input, PALCF_ERR_INTERNAL);
        CfPtr cf(cf_raw);
        if (e.format == "json") {
            rows.push_back(json{{"a0", a0},
                                {"d", d},
                                {"k", kk},
                                {"t", tt},
                                {"period", cf_json(cf.get())},
                                {"verified", verified}});
        } else {
            std::ostringstream line;
            line << "a0=" << a0 << " D=" << d << " k=" << kk << " t=" << tt
                 << " verified=" << yesno(verified)
                 << " period=" << take(palcf_cf_format(cf.get()));
            text_rows.push_back(line.str());
        }
    }

    if (e.format == "json") {
        json result{{"a0_class", json{{"value", value}, {"modulus", modulus}}},
                    {"rows", rows}};
        print_json(e, json{{"command", "sqrt-family"},
                           {"input", input},
                           {"result", result},
                           {"verified", all_verified},
                           {"branch", nullptr}});
    } else if (e.compact) {
        std::cout << "word=" << word_text(word) << " a0_class=" << value
                  << " mod " << modulus << " rows=" << text_rows.size()
                  << " verified=" << yesno(all_verified) << "\n";
    } else {
        std::cout << "word: " << word_text(word) << "\n"
                  << "a0 class: " << value << " mod " << modulus << "\n";
        for (const std::string& line : text_rows) std::cout << line << "\n";
    }
    return all_verified ? 0 : 1;
}

// ---- families ----

struct Range {
    long long lo = 0, hi = 0;
};

bool parse_range(const std::string& text, Range& out) {
    std::size_t dots = text.find("..");
    std::string lo = dots == std::string::npos ? text : text.substr(0, dots);
    std::string hi = dots == std::string::npos ? text : text.substr(dots + 2);
    try {
        std::size_t used = 0;
        out.lo = std::stoll(lo, &used);
        if (used != lo.size()) return false;
        out.hi = std::stoll(hi, &used);
        if (used != hi.size()) return false;
    } catch (const std::exception&) {
        return false;
    }
    return out.lo <= out.hi;
}

int run_families(const std::string& kind, const std::string& n,
                 const std::string& k, const std::string& m,
                 const std::string& range_text, const Emit& e) {
    json input{{"kind", kind}};
    Range range;

    // sleepers: fixed (n, k), m sweeps. creepers: fixed m, k = 2, j sweeps
    // with word length 2j.
    if (kind == "sleepers") {
        input["n"] = n;
        input["k"] = k;
        input["m"] = range_text;
        if (n.empty() || k.empty() || range_text.empty())
            return emit_error(e, "families", input, "Parse",
                              "sleepers needs -n, -k and -m LO..HI");
        if (!parse_range(range_text, range))
            return emit_error(e, "families", input, "Parse",
                              "bad range '" + range_text + "'");
    } else if (kind == "creepers") {
        input["m"] = m;
        input["j"] = range_text;
        if (m.empty() || range_text.empty())
            return emit_error(e, "families", input, "Parse",
                              "creepers needs -m and -j LO..HI");
        if (!parse_range(range_text, range))
            return emit_error(e, "families", input, "Parse",
                              "bad range '" + range_text + "'");
        if (range.lo < 1)
            return emit_error(e, "families", input, "Domain",
                              "j must be positive");
    } else {
        return emit_error(e, "families", input, "Parse",
                          "kind must be sleepers or creepers");
    }

    int worst = 0;
    bool all_verified = true;
    json rows = json::array();
    std::vector<std::string> text_rows;
    for (long long v = range.lo; v <= range.hi; ++v) {
        std::string row_n = kind == "sleepers" ? n : std::to_string(2 * v);
        std::string row_m = kind == "sleepers" ? std::to_string(v) : m;
        std::string row_k = kind == "sleepers" ? k : "2";
        std::string label = kind == "sleepers" ? "m=" + std::to_string(v)
                                               : "j=" + std::to_string(v);
        palcf_beta* raw = nullptr;
        palcf_status st =
            palcf_beta_new(row_n.c_str(), row_m.c_str(), row_k.c_str(), &raw);
        if (st != PALCF_OK) {
            worst = std::max(worst, 2);
            all_verified = false;
            if (e.format == "json")
                rows.push_back(json{{"param", label},
                                    {"error", json{{"code", status_label(st)},
                                                   {"message",
                                                    palcf_last_error()}}}});
            else
                text_rows.push_back(label + " error: " +
                                    std::string(status_label(st)) + ": " +
                                    palcf_last_error());
            continue;
        }
        BetaPtr b(raw);
        bool verified = palcf_beta_verified(b.get()) != 0;
        all_verified = all_verified && verified;
        if (!verified) worst = std::max(worst, 1);
        palcf_cf* cf_raw = nullptr;
        if (palcf_beta_cf(b.get(), &cf_raw) != PALCF_OK)
            return emit_status(e, "families", input, PALCF_ERR_INTERNAL);
        CfPtr cf(cf_raw);
        std::string d = take(palcf_beta_d(b.get()));
        std::size_t plen = palcf_cf_period_len(cf.get());
        if (e.format == "json") {
            rows.push_back(json{{"param", label},
                                {"n", row_n},
                                {"m", row_m},
                                {"k", row_k},
                                {"d", d},
                                {"branch", palcf_beta_branch(b.get())},
                                {"period_length", plen},
                                {"period", cf_json(cf.get())},
                                {"verified", verified}});
        } else {
            std::ostringstream line;
            line << label << " D=" << d << " period_length=" << plen
                 << " verified=" << yesno(verified)
                 << " period=" << take(palcf_cf_format(cf.get()));
            text_rows.push_back(line.str());
        }
    }

    if (e.format == "json") {
        print_json(e, json{{"command", "families"},
                           {"input", input},
                           {"result", json{{"rows", rows}}},
                           {"verified", all_verified},
                           {"branch", nullptr}});
    } else {
        if (!e.compact) {
            if (kind == "sleepers")
                std::cout << "sleepers n=" << n << " k=" << k << "\n";
            else
                std::cout << "creepers m=" << m << " k=2\n";
        }
        for (const std::string& line : text_rows) std::cout << line << "\n";
    }
    return worst;
}

// ---- verify ----

int run_verify(const std::string& suite, std::size_t budget,
               std::uint64_t seed, long long max_n, long long max_m,
               long long max_k, const Emit& e) {
    json input{{"suite", suite},
               {"budget", std::to_string(budget)},
               {"seed", std::to_string(seed)}};
    if (max_n > 0) input["max_n"] = std::to_string(max_n);
    if (max_m > 0) input["max_m"] = std::to_string(max_m);
    if (max_k > 0) input["max_k"] = std::to_string(max_k);

    palcf_report* raw = nullptr;
    palcf_status st =
        palcf_verify(suite.c_str(), budget, seed, max_n, max_m, max_k, &raw);
    if (st != PALCF_OK) return emit_status(e, "verify", input, st);
    ReportPtr r(raw);

    std::size_t total = palcf_report_total(r.get());
    std::size_t passed = palcf_report_passed(r.get());
    std::size_t nfail = palcf_report_failure_count(r.get());

    if (e.format == "json") {
        json failures = json::array();
        for (std::size_t i = 0; i < nfail; ++i)
            failures.push_back(
                json{{"input", take(palcf_report_failure_input(r.get(), i))},
                     {"expected",
                      take(palcf_report_failure_expected(r.get(), i))},
                     {"got", take(palcf_report_failure_got(r.get(), i))}});
        print_json(e, json{{"command", "verify"},
                           {"input", input},
                           {"result", json{{"total", total},
                                           {"passed", passed},
                                           {"failures", failures}}},
                           {"verified", nfail == 0},
                           {"branch", nullptr}});
    } else {
        std::cout << "suite: " << suite << "\n"
                  << "budget: " << budget << "  seed: " << seed << "\n"
                  << "total: " << total << "\n"
                  << "passed: " << passed << "\n"
                  << "failures: " << nfail << "\n";
        for (std::size_t i = 0; i < nfail; ++i) {
            std::cout << "failure " << i + 1 << ":\n"
                      << "  input: "
                      << take(palcf_report_failure_input(r.get(), i)) << "\n"
                      << "  expected: "
                      << take(palcf_report_failure_expected(r.get(), i)) << "\n"
                      << "  got: " << take(palcf_report_failure_got(r.get(), i))
                      << "\n";
        }
    }
    return nfail == 0 ? 0 : 1;
}

// ---- batch driver ----

int run_batch(const std::string& path, const Emit& e,
              const std::string& command,
              const std::function<int(const std::vector<std::string>&,
                                      const Emit&)>& row_fn) {
    std::ifstream in(path);
    if (!in)
        return emit_error(e, command, json{{"batch", path}}, "Parse",
                          "cannot open batch file '" + path + "'");
    Emit row_emit = e;
    row_emit.compact = true;
    std::string line;
    int worst = 0;
    while (std::getline(in, line)) {
        std::vector<std::string> toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        worst = std::max(worst, row_fn(toks, row_emit));
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact periodic continued fractions: palindromic periods, "
                 "constant-word square roots, and Pell solvers"};
    app.require_subcommand(1);

    // construct
    auto* con = app.add_subcommand(
        "construct", "algebraic integer with a prescribed palindromic period");
    std::string con_word, con_k, con_a0 = "0", con_format = "text", con_batch;
    con->add_option("-p,--palindrome", con_word,
                    "comma-separated palindromic word");
    con->add_option("-k,--k", con_k, "free parameter k");
    con->add_option("-a,--a0", con_a0, "integer shift a0")
        ->capture_default_str();
    con->add_option("--format", con_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    con->add_option("--batch", con_batch, "file of rows: WORD K [A0]");

    // beta
    auto* bet = app.add_subcommand(
        "beta", "expansion of sqrt(D) for the constant word of length n");
    std::string bet_n, bet_m, bet_k, bet_format = "text", bet_batch;
    bet->add_option("-n,--n", bet_n, "word length");
    bet->add_option("-m,--m", bet_m, "constant partial quotient");
    bet->add_option("-k,--k", bet_k, "free parameter k");
    bet->add_option("--format", bet_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    bet->add_option("--batch", bet_batch, "file of rows: N M K");

    // pell
    auto* pel = app.add_subcommand(
        "pell", "fundamental solution of x^2 - D y^2 = sign");
    std::string pel_n, pel_m, pel_k, pel_sign = "1", pel_format = "text",
                pel_batch;
    pel->add_option("-n,--n", pel_n, "word length");
    pel->add_option("-m,--m", pel_m, "constant partial quotient");
    pel->add_option("-k,--k", pel_k, "free parameter k");
    pel->add_option("--sign", pel_sign, "+1 or -1")->capture_default_str();
    pel->add_option("--format", pel_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    pel->add_option("--batch", pel_batch, "file of rows: N M K SIGN");

    // sqrt-family
    auto* fam = app.add_subcommand(
        "sqrt-family", "smallest D with sqrt(D) = [a0; {word, 2 a0}]");
    std::string fam_word, fam_format = "text", fam_batch;
    std::size_t fam_count = 1;
    fam->add_option("-p,--palindrome", fam_word,
                    "comma-separated palindromic word");
    fam->add_option("-c,--count", fam_count, "number of family members")
        ->capture_default_str();
    fam->add_option("--format", fam_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    fam->add_option("--batch", fam_batch, "file of rows: WORD COUNT");

    // families
    auto* gen = app.add_subcommand(
        "families", "sleeper and creeper families of sqrt(D) expansions");
    std::string gen_kind, gen_n, gen_k, gen_m, gen_j, gen_format = "text";
    gen->add_option("kind", gen_kind, "sleepers or creepers")->required();
    gen->add_option("-n,--n", gen_n, "word length (sleepers)");
    gen->add_option("-k,--k", gen_k, "free parameter k (sleepers)");
    gen->add_option("-m,--m", gen_m,
                    "m range LO..HI (sleepers) or fixed m (creepers)");
    gen->add_option("-j,--j", gen_j, "j range LO..HI (creepers)");
    gen->add_option("--format", gen_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // verify
    auto* ver = app.add_subcommand(
        "verify", "randomized cross-checks of the closed forms");
    std::string ver_suite = "all", ver_format = "text";
    std::size_t ver_budget = 50;
    std::uint64_t ver_seed = 0;
    long long ver_max_n = 0, ver_max_m = 0, ver_max_k = 0;
    ver->add_option("--suite", ver_suite,
                    "all, palindrome, beta, pell or raney")
        ->capture_default_str();
    ver->add_option("--budget", ver_budget, "cases per suite")
        ->capture_default_str();
    ver->add_option("--seed", ver_seed, "generator seed")
        ->capture_default_str();
    ver->add_option("--max-n", ver_max_n, "word length bound (default 12)");
    ver->add_option("--max-m", ver_max_m, "quotient bound (default 12)");
    ver->add_option("--max-k", ver_max_k, "k offset bound (default 10000)");
    ver->add_option("--format", ver_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (app.got_subcommand(con)) {
        Emit e{con_format, false};
        if (!con_batch.empty())
            return run_batch(con_batch, e, "construct",
                             [](const std::vector<std::string>& toks,
                                const Emit& row) {
                                 if (toks.size() < 2 || toks.size() > 3)
                                     return emit_error(
                                         row, "construct",
                                         json{{"row", word_json(toks)}},
                                         "Parse", "expected: WORD K [A0]");
                                 return run_construct(
                                     split(toks[0], ','), toks[1],
                                     toks.size() == 3 ? toks[2] : "0", row);
                             });
        if (con_word.empty() || con_k.empty())
            return emit_error(e, "construct", json::object(), "Parse",
                              "-p and -k are required without --batch");
        return run_construct(split(con_word, ','), con_k, con_a0, e);
    }
    if (app.got_subcommand(bet)) {
        Emit e{bet_format, false};
        if (!bet_batch.empty())
            return run_batch(
                bet_batch, e, "beta",
                [](const std::vector<std::string>& toks, const Emit& row) {
                    if (toks.size() != 3)
                        return emit_error(row, "beta",
                                          json{{"row", word_json(toks)}},
                                          "Parse", "expected: N M K");
                    return run_beta(toks[0], toks[1], toks[2], row);
                });
        if (bet_n.empty() || bet_m.empty() || bet_k.empty())
            return emit_error(e, "beta", json::object(), "Parse",
                              "-n, -m and -k are required without --batch");
        return run_beta(bet_n, bet_m, bet_k, e);
    }
    if (app.got_subcommand(pel)) {
        Emit e{pel_format, false};
        if (!pel_batch.empty())
            return run_batch(
                pel_batch, e, "pell",
                [](const std::vector<std::string>& toks, const Emit& row) {
                    if (toks.size() != 4)
                        return emit_error(row, "pell",
                                          json{{"row", word_json(toks)}},
                                          "Parse", "expected: N M K SIGN");
                    return run_pell(toks[0], toks[1], toks[2], toks[3], row);
                });
        if (pel_n.empty() || pel_m.empty() || pel_k.empty())
            return emit_error(e, "pell", json::object(), "Parse",
                              "-n, -m and -k are required without --batch");
        return run_pell(pel_n, pel_m, pel_k, pel_sign, e);
    }
    if (app.got_subcommand(fam)) {
        Emit e{fam_format, false};
        if (!fam_batch.empty())
            return run_batch(
                fam_batch, e, "sqrt-family",
                [](const std::vector<std::string>& toks, const Emit& row) {
                    if (toks.size() != 2)
                        return emit_error(row, "sqrt-family",
                                          json{{"row", word_json(toks)}},
                                          "Parse", "expected: WORD COUNT");
                    std::size_t count = 0;
                    try {
                        count = static_cast<std::size_t>(std::stoull(toks[1]));
                    } catch (const std::exception&) {
                        return emit_error(row, "sqrt-family",
                                          json{{"row", word_json(toks)}},
                                          "Parse",
                                          "bad count '" + toks[1] + "'");
                    }
                    return run_sqrt_family(split(toks[0], ','), count, row);
                });
        if (fam_word.empty())
            return emit_error(e, "sqrt-family", json::object(), "Parse",
                              "-p is required without --batch");
        return run_sqrt_family(split(fam_word, ','), fam_count, e);
    }
    if (app.got_subcommand(gen)) {
        Emit e{gen_format, false};
        std::string range = gen_kind == "creepers" ? gen_j : gen_m;
        return run_families(gen_kind, gen_n, gen_k, gen_m, range, e);
    }
    if (app.got_subcommand(ver)) {
        Emit e{ver_format, false};
        return run_verify(ver_suite, ver_budget, ver_seed, ver_max_n,
                          ver_max_m, ver_max_k, e);
    }
    return 2;
}
