#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "partrec/half_gamma.hpp"
#include "partrec/modular_forms.hpp"
#include "partrec/partitions.hpp"
#include "partrec/rational.hpp"
#include "partrec/real_hp.hpp"

namespace partrec {

/// Truncation parameters for the Dirichlet-series side. Defaults mirror the
/// published example: m-sum to 100, Dirichlet sum to 700, 60 digits.
struct TruncationParams {
    unsigned M = 100;
    unsigned N = 700;
    long prec = 60;
};

/// Kummer 1F1(a;b;z) by series with a geometric tail closure.
RealHP hyp1f1(const Rat& a, const Rat& b, const RealHP& z, long prec);

/// Gauss 2F1(a,b;c;z) for |z| < 1, same strategy.
RealHP hyp2f1(const Rat& a, const Rat& b, const Rat& c, const RealHP& z, long prec);

/// Whittaker M_{lambda,mu}(z) = e^{-z/2} z^{mu+1/2} 1F1(mu-lambda+1/2; 1+2mu; z), z > 0.
RealHP whittaker_m(const Rat& lambda, const Rat& mu, const RealHP& z, long prec);

/// Adaptive Gauss-Legendre integration of f over [a, b] to absolute
/// tolerance tol. Deterministic; throws precision_infeasible past the
/// recursion cap.
RealHP integrate(const std::function<RealHP(const RealHP&)>& f, const RealHP& a,
                 const RealHP& b, const RealHP& tol, long prec);

/// I(r,n): the Whittaker-kernel Laplace integral, by quadrature (after a
/// smoothing substitution y = u^2) and by its hypergeometric closed form.
/// The two must agree to ~10^{-prec+5}; n > 1, 0 <= r <= v.
RealHP integral_I_quadrature(unsigned r, unsigned long long n, unsigned v, long prec);
RealHP integral_I_closed(unsigned r, unsigned long long n, unsigned v, long prec);

/// omega_v(n) two ways: path A sums Gamma-weighted 2F1 values over r; path B
/// is the re-expanded double sum over (i,m) with the m-sum truncated under a
/// geometric bound. Defined for odd n > 1, v >= 2.
RealHP omega_path_a(unsigned v, unsigned long long n, long prec);
RealHP omega_path_b(unsigned v, unsigned long long n, long prec);

/// Exact Etilde_v(j,m) as rational * pi^{-(2v-1)}; v >= 2, 0 <= j <= v-2.
PiRat etilde(unsigned v, unsigned j, unsigned m);

/// Partial twisted Dirichlet sum D(f;N,s) = sum_{n<=N} (-4|n) a_f((n^2-1)/8) n^{-s}.
/// Only odd n >= 3 contribute; f must cover (N^2-1)/8. s is real (rational).
RealHP dirichlet_partial(const Eigenform& f, unsigned N, const Rat& s, long prec);
RealHP dirichlet_partial(const Eigenform& f, unsigned N, long s, long prec);

/// Worst-case bound on the discarded n > N part of D(f;s), from the divisor
/// bound |a_f(m)| <= d(m) m^{(2v-1)/2} <= 2 m^v.
RealHP dirichlet_tail_bound(unsigned v, unsigned N, long s, long prec);

struct PeterssonNorm {
    RealHP value;
    RealHP q_tail;  // bound from truncating the q-expansion
    RealHP y_tail;  // bound from cutting the cusp at y_max
};

/// ||f|| = iint |f|^2 y^{2v} dx dy / y^2 over the standard fundamental
/// domain. The x-integral is done in closed form per coefficient pair; the
/// y-integral is adaptive quadrature on [sqrt(3)/2, y_max] plus an
/// exponential tail estimate. y_max/n_terms of 0 mean: derive from prec.
PeterssonNorm petersson_norm(const Eigenform& f, unsigned weight, long prec,
                             double y_max = 0, unsigned n_terms = 0);

struct WeightedSum {
    RealHP value;
    RealHP tail_bound;  // m-sum tail + Dirichlet n-sum tail, both worst-case
};

/// D_f(M,N) = (1/||f||) sum_{j<=v-2} sum_{m<=M} Etilde_v(j,m) D(f; N, 2v+2j+2m+2).
WeightedSum weighted_sum_Df(unsigned v, const Eigenform& f, const RealHP& norm,
                            const TruncationParams& params);
WeightedSum weighted_sum_Df(unsigned v, const Eigenform& f, const TruncationParams& params);

struct TraceValue {
    RealHP value;
    RealHP tail_bound;
};

/// Tr_2v(n) = sum over the Hecke eigenbasis of D_f * a_f(n), with everything
/// behind it (eigenforms, norms, weighted sums) memoized per (v, params).
TraceValue hecke_trace(unsigned v, unsigned long long n, const TruncationParams& params);

struct Theorem3Report {
    unsigned v = 0;
    unsigned n_max = 0;
    TruncationParams params;
    std::string max_residual;   // decimal strings: reports never round silently
    std::string tail_bound;     // largest per-n error envelope
    bool below_envelope = false;
    std::string status;         // "pass" | "fail"
};

/// Checks the trace-form recurrence for 1 <= n <= n_max: the residual of
/// p3(n) against the formula must stay below the propagated truncation
/// envelope. A failure is a report, not an exception.
Theorem3Report verify_theorem3(unsigned v, unsigned n_max, const TruncationParams& params,
                               const PartitionTable& p3);

}  // namespace partrec
