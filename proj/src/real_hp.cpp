#include "partrec/real_hp.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace partrec {

mpfr_prec_t RealHP::bits_for(long digits) {
    if (digits < 1) throw std::invalid_argument("RealHP: precision must be >= 1 digit");
    // 3.322 bits per decimal digit plus guard bits
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 32);
}

RealHP::RealHP(long prec_digits) : prec_digits_(prec_digits) {
    mpfr_init2(v_, bits_for(prec_digits));
    mpfr_set_zero(v_, 1);
}

RealHP::RealHP(const Rat& value, long prec_digits) : prec_digits_(prec_digits) {
    mpfr_init2(v_, bits_for(prec_digits));
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

RealHP::RealHP(long value, long prec_digits) : prec_digits_(prec_digits) {
    mpfr_init2(v_, bits_for(prec_digits));
    mpfr_set_si(v_, value, MPFR_RNDN);
}

RealHP::RealHP(const Int& value, long prec_digits) : prec_digits_(prec_digits) {
    mpfr_init2(v_, bits_for(prec_digits));
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

RealHP::RealHP(const RealHP& other) : prec_digits_(other.prec_digits_) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

RealHP::RealHP(RealHP&& other) noexcept : prec_digits_(other.prec_digits_) {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, other.v_);
}

RealHP& RealHP::operator=(const RealHP& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
        prec_digits_ = other.prec_digits_;
    }
    return *this;
}

RealHP& RealHP::operator=(RealHP&& other) noexcept {
    if (this != &other) {
        mpfr_swap(v_, other.v_);
        prec_digits_ = other.prec_digits_;
    }
    return *this;
}

RealHP::~RealHP() { mpfr_clear(v_); }

RealHP RealHP::pi(long prec_digits) {
    RealHP r(prec_digits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

RealHP RealHP::from_string(const std::string& decimal, long prec_digits) {
    RealHP r(prec_digits);
    if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("RealHP: unparsable decimal string: " + decimal);
    return r;
}

#define PARTREC_HP_BINOP(op, fn)                                   \
    RealHP RealHP::operator op(const RealHP& rhs) const {          \
        RealHP r(std::min(prec_digits_, rhs.prec_digits_));        \
        fn(r.v_, v_, rhs.v_, MPFR_RNDN);                           \
        return r;                                                  \
    }                                                              \
    RealHP& RealHP::operator op##=(const RealHP& rhs) {            \
        *this = *this op rhs;                                      \
        return *this;                                              \
    }

PARTREC_HP_BINOP(+, mpfr_add)
PARTREC_HP_BINOP(-, mpfr_sub)
PARTREC_HP_BINOP(*, mpfr_mul)
PARTREC_HP_BINOP(/, mpfr_div)
#undef PARTREC_HP_BINOP

RealHP RealHP::operator-() const {
    RealHP r(prec_digits_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

#define PARTREC_HP_UNOP(name, fn)              \
    RealHP name(const RealHP& x) {             \
        RealHP r(x.prec_digits_);              \
        fn(r.v_, x.v_, MPFR_RNDN);             \
        return r;                              \
    }

PARTREC_HP_UNOP(exp, mpfr_exp)
PARTREC_HP_UNOP(log, mpfr_log)
PARTREC_HP_UNOP(sqrt, mpfr_sqrt)
PARTREC_HP_UNOP(sin, mpfr_sin)
PARTREC_HP_UNOP(cos, mpfr_cos)
PARTREC_HP_UNOP(abs, mpfr_abs)
#undef PARTREC_HP_UNOP

RealHP RealHP::pow_int(long e) const {
    RealHP r(prec_digits_);
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

RealHP RealHP::pow_rat(const Rat& e) const {
    if (e.get_den() == 1 && e.get_num().fits_slong_p())
        return pow_int(e.get_num().get_si());
    if (sign() <= 0) throw std::domain_error("RealHP::pow_rat: base must be positive");
    RealHP le(prec_digits_);
    mpfr_log(le.v_, v_, MPFR_RNDN);
    RealHP er(e, prec_digits_);
    RealHP r(prec_digits_);
    mpfr_mul(r.v_, le.v_, er.v_, MPFR_RNDN);
    mpfr_exp(r.v_, r.v_, MPFR_RNDN);
    return r;
}

std::string RealHP::to_string(long digits) const {
    if (digits <= 0) digits = prec_digits_;
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits - 1), v_);
    return std::string(buf.data());
}

}  // namespace partrec
