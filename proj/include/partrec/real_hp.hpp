#pragma once

#include <mpfr.h>

#include <string>

#include "partrec/rational.hpp"

namespace partrec {

/// Arbitrary-precision real with an explicit working precision in decimal
/// digits. Binary precision carries a few guard digits on top; arithmetic
/// between operands of different precision takes the minimum, so a result's
/// stated precision never overstates what went into it.
class RealHP {
public:
    explicit RealHP(long prec_digits = 30);
    RealHP(const Rat& value, long prec_digits);
    RealHP(long value, long prec_digits);
    RealHP(const Int& value, long prec_digits);

    RealHP(const RealHP& other);
    RealHP(RealHP&& other) noexcept;
    RealHP& operator=(const RealHP& other);
    RealHP& operator=(RealHP&& other) noexcept;
    ~RealHP();

    static RealHP pi(long prec_digits);
    static RealHP from_string(const std::string& decimal, long prec_digits);

    long prec_digits() const { return prec_digits_; }

    RealHP operator+(const RealHP& rhs) const;
    RealHP operator-(const RealHP& rhs) const;
    RealHP operator*(const RealHP& rhs) const;
    RealHP operator/(const RealHP& rhs) const;
    RealHP operator-() const;
    RealHP& operator+=(const RealHP& rhs);
    RealHP& operator-=(const RealHP& rhs);
    RealHP& operator*=(const RealHP& rhs);
    RealHP& operator/=(const RealHP& rhs);

    friend RealHP exp(const RealHP& x);
    friend RealHP log(const RealHP& x);
    friend RealHP sqrt(const RealHP& x);
    friend RealHP sin(const RealHP& x);
    friend RealHP cos(const RealHP& x);
    friend RealHP abs(const RealHP& x);

    /// x^e for integer e (exact exponentiation at x's precision).
    RealHP pow_int(long e) const;
    /// x^(p/q) for x > 0, via exp(e log x).
    RealHP pow_rat(const Rat& e) const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int compare(const RealHP& rhs) const { return mpfr_cmp(v_, rhs.v_); }
    bool operator<(const RealHP& rhs) const { return compare(rhs) < 0; }
    bool operator>(const RealHP& rhs) const { return compare(rhs) > 0; }
    bool operator<=(const RealHP& rhs) const { return compare(rhs) <= 0; }
    bool operator>=(const RealHP& rhs) const { return compare(rhs) >= 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Decimal string in scientific form with the given significant digits
    /// (defaults to the value's stated precision).
    std::string to_string(long digits = 0) const;

    /// Raw handle for the few call sites that drive mpfr directly.
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    static mpfr_prec_t bits_for(long digits);

    mpfr_t v_;
    long prec_digits_;
};

RealHP exp(const RealHP& x);
RealHP log(const RealHP& x);
RealHP sqrt(const RealHP& x);
RealHP sin(const RealHP& x);
RealHP cos(const RealHP& x);
RealHP abs(const RealHP& x);

}  // namespace partrec
