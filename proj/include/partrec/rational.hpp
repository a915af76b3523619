#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace partrec {

using Int = mpz_class;
using Rat = mpq_class;

/// Reduced rational with positive denominator. mpq_class(n, d) does not
/// canonicalize on its own, so all construction goes through here.
inline Rat rat(const Int& num, const Int& den = 1) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

/// Parses "p/q" or "p" (decimal strings).
inline Rat rat_from_string(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return rat(Int(std::string(s)), Int(1));
    return rat(Int(std::string(s.substr(0, slash))), Int(std::string(s.substr(slash + 1))));
}

/// Canonical serialization: always "p/q", never a bare float or integer.
inline std::string to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;  // powers of a canonical rational are canonical
}

/// Exact integer square root; returns floor(sqrt(n)).
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace partrec
