#include "partrec/half_gamma.hpp"

#include <stdexcept>

namespace partrec {

RealHP PiRat::to_real(long prec_digits) const {
    RealHP value(r, prec_digits);
    if (pi_power != 0) value *= RealHP::pi(prec_digits).pow_int(pi_power);
    return value;
}

Rat gamma_half_coeff(long two_x) {
    if (two_x % 2 == 0)
        throw std::invalid_argument("gamma_half_coeff: argument must be a half-odd integer");
    const long n = (two_x - 1) / 2;
    if (n >= 0) {
        const unsigned long un = static_cast<unsigned long>(n);
        return rat(factorial(2 * un), pow_int(Int(4), un) * factorial(un));
    }
    const unsigned long m = static_cast<unsigned long>(-n);
    Int num = pow_int(Int(-4), m) * factorial(m);
    return rat(num, factorial(2 * m));
}

Rat rising_half(long two_a, unsigned j) {
    Rat r = rat(1);
    for (unsigned i = 0; i < j; ++i) r *= rat(two_a + 2L * i, 2);
    return r;
}

Rat rising_int(long a, unsigned j) {
    Rat r = rat(1);
    for (unsigned i = 0; i < j; ++i) r *= rat(a + static_cast<long>(i));
    return r;
}

HalfGammaRatio& HalfGammaRatio::mul_gamma_half(long two_x) {
    coeff_ *= gamma_half_coeff(two_x);
    ++sqrt_pi_;
    return *this;
}

HalfGammaRatio& HalfGammaRatio::div_gamma_half(long two_x) {
    coeff_ /= gamma_half_coeff(two_x);
    --sqrt_pi_;
    return *this;
}

HalfGammaRatio& HalfGammaRatio::mul_rat(const Rat& q) {
    coeff_ *= q;
    return *this;
}

HalfGammaRatio& HalfGammaRatio::div_rat(const Rat& q) {
    if (q == 0) throw std::domain_error("HalfGammaRatio: division by zero");
    coeff_ /= q;
    return *this;
}

HalfGammaRatio& HalfGammaRatio::mul_pi(long e) {
    pi_ += e;
    return *this;
}

Rat HalfGammaRatio::as_rat() const {
    if (sqrt_pi_ != 0 || pi_ != 0)
        throw std::domain_error("HalfGammaRatio: residual pi power, value is not rational");
    return coeff_;
}

PiRat HalfGammaRatio::as_pi_rat() const {
    if (sqrt_pi_ % 2 != 0)
        throw std::domain_error("HalfGammaRatio: odd sqrt(pi) power cannot reduce to PiRat");
    return PiRat{coeff_, pi_ + sqrt_pi_ / 2};
}

}  // namespace partrec
