#pragma once

#include "partrec/rational.hpp"
#include "partrec/real_hp.hpp"

namespace partrec {

/// Exact rational times an integer power of pi.
struct PiRat {
    Rat r;
    long pi_power = 0;

    RealHP to_real(long prec_digits) const;
    bool operator==(const PiRat&) const = default;
};

/// Gamma(two_x/2) for odd two_x, as the exact rational multiplying sqrt(pi):
///   Gamma(n + 1/2)  = (2n)! / (4^n n!) * sqrt(pi)
///   Gamma(1/2 - n)  = (-4)^n n! / (2n)! * sqrt(pi)
Rat gamma_half_coeff(long two_x);

/// Rising factorial (a)(a+1)...(a+j-1) for a = two_a/2.
Rat rising_half(long two_a, unsigned j);

/// Rising factorial for integer a; empty product is 1.
Rat rising_int(long a, unsigned j);

/// A product/quotient of Gamma values at half-integer arguments (plus
/// explicit rational and pi factors), reduced exactly. Every Gamma at a
/// half-odd-integer contributes one sqrt(pi); extraction demands that the
/// net sqrt(pi) power is zero (as_rat) or even (as_pi_rat) and fails loudly
/// otherwise.
class HalfGammaRatio {
public:
    HalfGammaRatio& mul_gamma_half(long two_x);
    HalfGammaRatio& div_gamma_half(long two_x);
    HalfGammaRatio& mul_rat(const Rat& q);
    HalfGammaRatio& div_rat(const Rat& q);
    HalfGammaRatio& mul_pi(long e);

    long sqrt_pi_power() const { return sqrt_pi_; }
    Rat as_rat() const;
    PiRat as_pi_rat() const;

private:
    Rat coeff_ = rat(1);
    long sqrt_pi_ = 0;  // net power of sqrt(pi)
    long pi_ = 0;       // explicit pi factors
};

}  // namespace partrec
