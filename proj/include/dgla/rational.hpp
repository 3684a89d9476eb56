#pragma once

// Exact rational scalars. Everything in this project is computed over Q with
// zero tolerance: equality of rationals, vectors and matrices is exact.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace dgla {

using Rat = mpq_class;
using Vec = std::vector<Rat>;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define DGLA_REQUIRE(cond, msg)                  \
    do {                                         \
        if (!(cond)) throw ::dgla::input_error(msg); \
    } while (0)

/// Parse "p", "-p" or "p/q" into a canonical (reduced, positive denominator)
/// rational. Rejects anything else, including q = 0.
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') pos = 1;
    bool seen_digit = false, seen_slash = false;
    for (std::size_t i = pos; i < s.size(); ++i) {
        if (s[i] == '/') {
            if (seen_slash || !seen_digit || i + 1 == s.size())
                throw input_error("malformed rational literal: " + s);
            seen_slash = true;
            seen_digit = false;
        } else if (s[i] >= '0' && s[i] <= '9') {
            seen_digit = true;
        } else {
            throw input_error("malformed rational literal: " + s);
        }
    }
    if (!seen_digit) throw input_error("malformed rational literal: " + s);
    Rat r(s);
    if (r.get_den() == 0) throw input_error("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// (-1)^n for any integer n (negative exponents included).
inline int sign_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

inline Rat rat_sign(long n) { return Rat(sign_pow(n)); }

inline bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Vec vec_zero(std::size_t n) { return Vec(n, Rat(0)); }

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline Vec vec_scale(const Rat& c, const Vec& a) {
    Vec r(a);
    for (auto& x : r) x *= c;
    return r;
}

}  // namespace dgla
