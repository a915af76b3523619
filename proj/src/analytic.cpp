#include "partrec/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "partrec/errors.hpp"
#include "partrec/rankin_cohen.hpp"

namespace partrec {

namespace {

RealHP ten_pow(long e, long prec) {
    return RealHP(10L, prec).pow_int(e);
}

bool is_nonpositive_integer(const Rat& q) {
    return q.get_den() == 1 && q.get_num() <= 0;
}

double rat_d(const Rat& q) { return q.get_d(); }

}  // namespace

RealHP hyp1f1(const Rat& a, const Rat& b, const RealHP& z, long prec) {
    if (is_nonpositive_integer(b))
        throw std::invalid_argument("hyp1f1: b at a pole of the series");
    const long work = prec + 12;
    RealHP sum(1L, work), term(1L, work);
    const RealHP az = abs(z);
    const double zd = std::abs(z.to_double());
    const double A = std::max(std::abs(rat_d(a)), 1.0);
    const double C = std::abs(rat_d(b));
    const RealHP target = ten_pow(-(prec + 10), work);
    for (unsigned long k = 0;; ++k) {
        const Rat num = (a + Rat(static_cast<long>(k)));
        const Rat den = (b + Rat(static_cast<long>(k))) * Rat(static_cast<long>(k + 1));
        if (den == 0) throw std::invalid_argument("hyp1f1: series hit a pole");
        term = term * z * RealHP(num / den, work);
        sum += term;
        // once the ratio majorant rho = |z| (k+A)/((k+1)(k-C)) drops below
        // 1/2, the remainder is bounded by the last term
        const double kd = static_cast<double>(k) + 1.0;
        if (kd > C + 1 && zd * (kd + A) / ((kd + 1) * (kd - C)) < 0.5) {
            RealHP bound = abs(term) * RealHP(2L, work);
            if (bound < target * (RealHP(1L, work) + abs(sum))) break;
        }
        if (k > 100000) throw precision_infeasible("hyp1f1: series did not converge");
    }
    return sum + RealHP(0L, prec);
}

RealHP hyp2f1(const Rat& a, const Rat& b, const Rat& c, const RealHP& z, long prec) {
    if (is_nonpositive_integer(c))
        throw std::invalid_argument("hyp2f1: c at a pole of the series");
    if (!(abs(z) < RealHP(1L, prec)))
        throw std::domain_error("hyp2f1: series needs |z| < 1");
    const long work = prec + 12;
    RealHP sum(1L, work), term(1L, work);
    const double zd = std::abs(z.to_double());
    const double A = std::max({std::abs(rat_d(a)), std::abs(rat_d(b)), 1.0});
    const double C = std::abs(rat_d(c));
    const RealHP target = ten_pow(-(prec + 10), work);
    for (unsigned long k = 0;; ++k) {
        const Rat num = (a + Rat(static_cast<long>(k))) * (b + Rat(static_cast<long>(k)));
        const Rat den = (c + Rat(static_cast<long>(k))) * Rat(static_cast<long>(k + 1));
        if (den == 0) throw std::invalid_argument("hyp2f1: series hit a pole");
        term = term * z * RealHP(num / den, work);
        sum += term;
        // majorant rho = |z| (k+A)^2 / ((k+1)(k-C)) -> |z| < 1
        const double kd = static_cast<double>(k) + 1.0;
        if (kd > C + 1) {
            const double rho = zd * (kd + A) * (kd + A) / ((kd + 1) * (kd - C));
            if (rho < 0.9) {
                RealHP bound = abs(term) * RealHP(Rat(mpq_class(rho / (1 - rho) + 1.0)), work);
                if (bound < target * (RealHP(1L, work) + abs(sum))) break;
            }
        }
        if (k > 200000) throw precision_infeasible("hyp2f1: series did not converge");
    }
    return sum + RealHP(0L, prec);
}

RealHP whittaker_m(const Rat& lambda, const Rat& mu, const RealHP& z, long prec) {
    const Rat one_plus_2mu = Rat(1) + Rat(2) * mu;
    if (is_nonpositive_integer(one_plus_2mu))
        throw std::invalid_argument("whittaker_m: 1+2mu at a pole");
    if (z.sign() <= 0) throw std::domain_error("whittaker_m: z must be positive");
    const long work = prec + 10;
    const Rat a = mu - lambda + Rat(1, 2);
    RealHP kummer = hyp1f1(a, one_plus_2mu, z, work);
    RealHP half(Rat(1, 2), work);
    RealHP zw = z + RealHP(0L, work);
    RealHP result = exp(-zw * half) * zw.pow_rat(mu + Rat(1, 2)) * kummer;
    return result + RealHP(0L, prec);
}

// ---------------------------------------------------------------------------
// Gauss-Legendre quadrature
// ---------------------------------------------------------------------------

namespace {

struct GLRule {
    std::vector<RealHP> nodes;    // on (0,1), symmetric half omitted
    std::vector<RealHP> weights;
    long prec;
    unsigned n;
};

// Legendre P_n and P_n' at x by the three-term recurrence.
void legendre_eval(unsigned n, const RealHP& x, long prec, RealHP& p, RealHP& dp) {
    RealHP p0(1L, prec), p1 = x;
    for (unsigned k = 2; k <= n; ++k) {
        RealHP pk = (RealHP(static_cast<long>(2 * k - 1), prec) * x * p1 -
                     RealHP(static_cast<long>(k - 1), prec) * p0) /
                    RealHP(static_cast<long>(k), prec);
        p0 = p1;
        p1 = pk;
    }
    p = p1;
    // (1-x^2) P_n'(x) = n (P_{n-1}(x) - x P_n(x))
    dp = RealHP(static_cast<long>(n), prec) * (p0 - x * p1) /
         (RealHP(1L, prec) - x * x);
}

const GLRule& gl_rule(unsigned n, long prec) {
    static std::map<std::pair<unsigned, long>, GLRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, prec);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    GLRule rule;
    rule.prec = prec;
    rule.n = n;
    const RealHP tol = ten_pow(-(prec + 6), prec);
    for (unsigned i = 1; i <= n / 2; ++i) {
        double seed = std::cos(M_PI * (i - 0.25) / (n + 0.5));
        RealHP x(Rat(mpq_class(seed)), prec);
        RealHP p(prec), dp(prec);
        for (int it2 = 0; it2 < 200; ++it2) {
            legendre_eval(n, x, prec, p, dp);
            RealHP step = p / dp;
            x -= step;
            if (abs(step) < tol) break;
        }
        legendre_eval(n, x, prec, p, dp);
        RealHP w = RealHP(2L, prec) / ((RealHP(1L, prec) - x * x) * dp * dp);
        rule.nodes.push_back(x);
        rule.weights.push_back(w);
    }
    return cache.emplace(key, std::move(rule)).first->second;
}

RealHP gl_apply(const std::function<RealHP(const RealHP&)>& f, const RealHP& a,
                const RealHP& b, const GLRule& rule, long prec) {
    RealHP half(Rat(1, 2), prec);
    RealHP mid = (a + b) * half;
    RealHP rad = (b - a) * half;
    RealHP acc(0L, prec);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        acc += rule.weights[i] * (f(mid + rad * rule.nodes[i]) + f(mid - rad * rule.nodes[i]));
    }
    return acc * rad;
}

RealHP integrate_adaptive(const std::function<RealHP(const RealHP&)>& f, const RealHP& a,
                          const RealHP& b, const RealHP& tol, long prec, const GLRule& rule,
                          int depth) {
    if (depth > 64)
        throw precision_infeasible("integrate: recursion limit; tolerance unreachable");
    RealHP whole = gl_apply(f, a, b, rule, prec);
    RealHP mid = (a + b) * RealHP(Rat(1, 2), prec);
    RealHP left = gl_apply(f, a, mid, rule, prec);
    RealHP right = gl_apply(f, mid, b, rule, prec);
    RealHP split = left + right;
    // refining below the integrand's own precision floor only chases noise;
    // split carries the min precision of everything that fed it
    const long p = std::max<long>(split.prec_digits() - 3, 5);
    RealHP floor_tol = (abs(whole) + abs(left) + abs(right)) * ten_pow(-p, prec);
    const RealHP& eff = (tol < floor_tol) ? floor_tol : tol;
    if (abs(whole - split) <= eff) return split;
    RealHP half_tol = eff * RealHP(Rat(1, 2), prec);
    return integrate_adaptive(f, a, mid, half_tol, prec, rule, depth + 1) +
           integrate_adaptive(f, mid, b, half_tol, prec, rule, depth + 1);
}

}  // namespace

RealHP integrate(const std::function<RealHP(const RealHP&)>& f, const RealHP& a,
                 const RealHP& b, const RealHP& tol, long prec) {
    const GLRule& rule = gl_rule(32, prec);
    return integrate_adaptive(f, a, b, tol, prec, rule, 0);
}

// ---------------------------------------------------------------------------
// The Laplace-type integral I(r,n) and omega_v(n)
// ---------------------------------------------------------------------------

RealHP integral_I_quadrature(unsigned r, unsigned long long n, unsigned v, long prec) {
    if (n <= 1) throw std::domain_error("integral_I: n must exceed 1");
    if (r > v) throw std::invalid_argument("integral_I: need 0 <= r <= v");
    const long work = prec + 15;
    const RealHP pi = RealHP::pi(work);
    const RealHP one(1L, work);
    const Rat b = Rat(7, 2) - Rat(static_cast<long>(r));

    // After M's Kummer form and y = u^2 the integrand is entire:
    //   2 (pi/2)^{5/2-r} u^{4v-2r+2} 1F1(1; 7/2-r; pi u^2/2) exp(-pi n^2 u^2 / 2)
    const RealHP pref = (pi * RealHP(Rat(1, 2), work)).pow_rat(Rat(5, 2) - Rat((long)r)) *
                        RealHP(2L, work);
    const long upow = 4L * v - 2L * r + 2;
    const RealHP half_pi = pi * RealHP(Rat(1, 2), work);
    const RealHP n2(Rat(static_cast<long>(n * n)), work);

    auto integrand = [&](const RealHP& u) {
        const RealHP u2 = u * u;
        const RealHP z = half_pi * u2;
        return pref * u.pow_int(upow) * hyp1f1(Rat(1), b, z, work) * exp(-n2 * z);
    };

    // net decay exp(-pi (n^2-1) u^2/2) once the Kummer growth is absorbed
    const double decay = M_PI * (static_cast<double>(n) * n - 1) / 2;
    const double logten = std::log(10.0);
    double y_max = ((prec + 18) * logten + (2.0 * v + 4) * std::log(10.0 + v)) / decay;
    const RealHP u_max(Rat(mpq_class(std::sqrt(y_max) + 0.5)), work);

    // scale probe at the interior maximum of u^p e^{-c u^2}
    const double u_peak = std::sqrt(upow / (2 * M_PI * (static_cast<double>(n) * n)));
    RealHP probe = abs(integrand(RealHP(Rat(mpq_class(std::max(u_peak, 1e-3))), work)));
    RealHP tol = (probe + ten_pow(-(prec + 30), work)) * ten_pow(-(prec + 8), work);

    RealHP result = integrate(integrand, RealHP(0L, work), u_max, tol, work);
    return result + RealHP(0L, prec);
}

RealHP integral_I_closed(unsigned r, unsigned long long n, unsigned v, long prec) {
    if (n <= 1) throw std::domain_error("integral_I: n must exceed 1");
    if (r > v) throw std::invalid_argument("integral_I: need 0 <= r <= v");
    const long work = prec + 10;
    const RealHP pi = RealHP::pi(work);
    // (2/pi)^{2v-1} Gamma(2v-r+3/2) n^{-(4v-2r+3)} 2F1(1, 3/2+2v-r; 7/2-r; 1/n^2)
    const Rat gcoeff = gamma_half_coeff(4L * v - 2L * r + 3);
    const RealHP gamma_val = RealHP(gcoeff, work) * sqrt(pi);
    const RealHP two_over_pi = RealHP(2L, work) / pi;
    const Rat zr = Rat(1) / Rat(static_cast<long>(n * n));
    const RealHP f21 = hyp2f1(Rat(1), Rat(3, 2) + Rat(2L * v) - Rat((long)r),
                              Rat(7, 2) - Rat((long)r), RealHP(zr, work), work);
    RealHP npow = RealHP(Rat(static_cast<long>(n)), work).pow_int(-(4L * v - 2L * r + 3));
    RealHP result = two_over_pi.pow_int(2L * v - 1) * gamma_val * npow * f21;
    return result + RealHP(0L, prec);
}

RealHP omega_path_a(unsigned v, unsigned long long n, long prec) {
    if (v < 2 || n <= 1 || n % 2 == 0)
        throw std::domain_error("omega: needs v >= 2 and odd n > 1");
    const long work = prec + 10;
    const RealHP sqrt_pi = sqrt(RealHP::pi(work));
    const Rat z = Rat(1) / Rat(static_cast<long>(n * n));
    RealHP acc(0L, work);
    for (unsigned r = 0; r <= v; ++r) {
        const unsigned s = v - r;
        HalfGammaRatio g;
        g.mul_gamma_half(2L * v - 3).mul_gamma_half(2L * v + 3);
        g.div_gamma_half(2L * r - 3).div_gamma_half(2L * s + 3);
        g.div_rat(rat(factorial(r) * factorial(s)));
        Rat coeff = g.as_rat() * rising_half(-5, r) * gamma_half_coeff(4L * v - 2L * r + 3);
        if (r % 2 == 1) coeff = -coeff;
        const RealHP f21 = hyp2f1(Rat(1), Rat(3, 2) + Rat(2L * v) - Rat((long)r),
                                  Rat(7, 2) - Rat((long)r), RealHP(z, work), work);
        acc += RealHP(coeff, work) * f21;
    }
    return acc * sqrt_pi + RealHP(0L, prec);
}

RealHP omega_path_b(unsigned v, unsigned long long n, long prec) {
    if (v < 2 || n <= 1 || n % 2 == 0)
        throw std::domain_error("omega: needs v >= 2 and odd n > 1");
    const long work = prec + 10;
    // prefactor Gamma(v-3/2)Gamma(v+3/2)/Gamma(-3/2) carries one net sqrt(pi)
    const Rat pref =
        gamma_half_coeff(2L * v - 3) * gamma_half_coeff(2L * v + 3) / gamma_half_coeff(-3);
    const Rat inv_n2 = Rat(1) / Rat(static_cast<long>(n * n));

    // double sum over i <= v-2 and m, truncated where the geometric bound
    // on the m-tail dips below the target
    const RealHP target = ten_pow(-(prec + 9), work);
    RealHP acc(0L, work);
    for (unsigned i = 0; i <= v - 2; ++i) {
        Rat fixed = Rat(binomial(2 * v - 2, i)) * rising_int(static_cast<long>(v - i) - 1, v) *
                    rising_half(5, i) /
                    (rising_half(-3 - 2L * i, v) * rising_half(7, i));
        if (i % 2 == 1) fixed = -fixed;
        fixed *= pow_rat(inv_n2, i);
        RealHP isum(0L, work);
        Rat mterm = rat(1);
        for (unsigned m = 0;; ++m) {
            if (m > 0) {
                mterm *= Rat(2L * v + m - 2) / Rat(static_cast<long>(m)) * inv_n2;
            }
            isum += RealHP(mterm, work);
            // next ratio (2v+m-1)/((m+1) n^2) dominates all later ones
            const double rho =
                (2.0 * v + m - 1.0) / ((m + 1.0) * static_cast<double>(n) * n);
            if (rho < 0.5) {
                RealHP bound = RealHP(abs(mterm), work) *
                               RealHP(Rat(mpq_class(rho / (1 - rho) + 1e-30)), work);
                if (bound < target * (RealHP(1L, work) + abs(isum))) break;
            }
            if (m > 2000000) throw precision_infeasible("omega_path_b: m-sum stalled");
        }
        acc += RealHP(fixed, work) * isum;
    }
    return acc * RealHP(pref, work) * sqrt(RealHP::pi(work)) + RealHP(0L, prec);
}

// ---------------------------------------------------------------------------
// Etilde, Dirichlet sums, Petersson norms, the weighted sum, the trace
// ---------------------------------------------------------------------------

PiRat etilde(unsigned v, unsigned j, unsigned m) {
    if (v < 2) throw std::invalid_argument("etilde: v must be >= 2");
    if (j > v - 2) throw std::invalid_argument("etilde: j must satisfy 0 <= j <= v-2");
    HalfGammaRatio g;
    g.mul_gamma_half(2L * v - 3).mul_gamma_half(2L * v + 3);
    g.div_gamma_half(7).div_gamma_half(-3);
    g.mul_rat(rat(pow_int(Int(2), 2 * v - 1), pow_int(Int(8), v)));
    g.mul_pi(-(2L * v - 1));
    g.mul_rat(rat(binomial(2 * v + m - 2, m) * binomial(2 * v - 2, j)));
    g.mul_rat(rising_int(static_cast<long>(v - j) - 1, v) * rising_half(5, j));
    g.div_rat(rising_half(-3 - 2L * j, v) * rising_half(7, j));
    if (j % 2 == 1) g.mul_rat(rat(-1));
    return g.as_pi_rat();
}

namespace {

int kronecker_minus4(unsigned long long n) {
    if (n % 2 == 0) return 0;
    return (n % 4 == 1) ? 1 : -1;
}

}  // namespace

RealHP dirichlet_partial(const Eigenform& f, unsigned N, const Rat& s, long prec) {
    const unsigned long long max_odd = (N >= 3) ? (N % 2 == 1 ? N : N - 1) : 0;
    if (max_odd >= 3) {
        const unsigned long long need = (max_odd * max_odd - 1) / 8;
        if (f.max_n() < need)
            throw truncation_error("dirichlet_partial: coefficients cover only " +
                                   std::to_string(f.max_n()) + ", need " + std::to_string(need));
    }
    const long work = prec + 10;
    RealHP acc(0L, work);
    for (unsigned long long n = 3; n <= N; n += 2) {
        const int chi = kronecker_minus4(n);
        const unsigned long long m = (n * n - 1) / 8;
        RealHP a = f.coeff(static_cast<std::size_t>(m), work);
        if (a.sign() == 0) continue;
        RealHP npow = RealHP(Rat(static_cast<long>(n)), work).pow_rat(-s);
        if (chi > 0)
            acc += a * npow;
        else
            acc -= a * npow;
    }
    return acc + RealHP(0L, prec);
}

RealHP dirichlet_partial(const Eigenform& f, unsigned N, long s, long prec) {
    return dirichlet_partial(f, N, Rat(s), prec);
}

RealHP dirichlet_tail_bound(unsigned v, unsigned N, long s, long prec) {
    // |a_f(m)| <= d(m) m^{(2v-1)/2} <= 2 m^v with m <= n^2/8, so each term is
    // at most 2 8^{-v} n^{2v-s}; integrate the decreasing majorant past N.
    if (s < static_cast<long>(2 * v) + 2)
        throw std::domain_error("dirichlet_tail_bound: needs s >= 2v+2");
    const RealHP two(2L, prec);
    const RealHP eightv = RealHP(8L, prec).pow_int(static_cast<long>(v));
    const RealHP npow = RealHP(Rat(static_cast<long>(N)), prec)
                            .pow_int(static_cast<long>(2 * v) + 1 - s);
    const RealHP denom(static_cast<long>(s - 2 * v - 1), prec);
    return two / eightv * npow / denom;
}

PeterssonNorm petersson_norm(const Eigenform& f, unsigned weight, long prec, double y_max_in,
                             unsigned n_terms_in) {
    const long work = prec + 12;
    const unsigned v = weight / 2;
    const RealHP pi = RealHP::pi(work);
    const RealHP two_pi = pi * RealHP(2L, work);
    const RealHP y0 = sqrt(RealHP(3L, work)) * RealHP(Rat(1, 2), work);

    // q-truncation count: coefficients weighted by e^{-2 pi y0 n} under the
    // divisor bound 2 n^v must drop below the target
    const double y0d = std::sqrt(3.0) / 2;
    const double log_x0 = -2 * M_PI * y0d;
    unsigned K = n_terms_in;
    if (K == 0) {
        K = 8;
        while (std::log(2.0) + v * std::log(double(K)) + K * log_x0 >
               -(prec + 14) * std::log(10.0))
            ++K;
    }
    if (f.max_n() < K)
        throw truncation_error("petersson_norm: eigenform table shorter than " +
                               std::to_string(K));

    double y_max = y_max_in;
    if (y_max <= 0) y_max = ((prec + 12) * std::log(10.0)) / (4 * M_PI) + v + 2;

    // pairwise coefficient products, shared across quadrature nodes
    std::vector<RealHP> a;
    a.reserve(K + 1);
    for (unsigned n = 0; n <= K; ++n) a.push_back(f.coeff(n, work));
    std::vector<std::vector<RealHP>> prod(K + 1);
    for (unsigned m = 1; m <= K; ++m) {
        prod[m].reserve(m + 1);
        prod[m].push_back(RealHP(0L, work));
        for (unsigned n = 1; n <= m; ++n) prod[m].push_back(a[m] * a[n]);
    }

    // sum_{m,n <= K} a(m) a(n) e^{-2pi(m+n)y} X_{mn}(c), with the exact
    // x-integral X over the allowed strip at height y; c = 0 above y = 1.
    auto h = [&](const RealHP& y, bool below_one) {
        std::vector<RealHP> E(2 * K + 1, RealHP(0L, work));
        E[1] = exp(-two_pi * y);
        for (unsigned i = 2; i <= 2 * K; ++i) E[i] = E[i - 1] * E[1];
        if (!below_one) {
            RealHP acc(0L, work);
            for (unsigned n = 1; n <= K; ++n) {
                if (a[n].sign() == 0) continue;
                acc += prod[n][n] * E[2 * n];
            }
            return acc;
        }
        const RealHP c = sqrt(RealHP(1L, work) - y * y);
        const RealHP u = two_pi * c;
        // sin(d u) by recurrence
        std::vector<RealHP> sd(K, RealHP(0L, work));
        if (K >= 2) {
            sd[1] = sin(u);
            const RealHP twocos = cos(u) * RealHP(2L, work);
            for (unsigned d = 2; d < K; ++d) sd[d] = twocos * sd[d - 1] - sd[d - 2];
        }
        const RealHP diag = RealHP(1L, work) - RealHP(2L, work) * c;
        RealHP acc(0L, work);
        for (unsigned m = 1; m <= K; ++m) {
            if (a[m].sign() == 0) continue;
            acc += prod[m][m] * E[2 * m] * diag;
            for (unsigned n = 1; n < m; ++n) {
                if (a[n].sign() == 0) continue;
                const unsigned d = m - n;
                // 2 * (-sin(2 pi d c)/(pi d))
                acc -= prod[m][n] * E[m + n] * sd[d] * RealHP(2L, work) /
                       (pi * RealHP(static_cast<long>(d), work));
            }
        }
        return acc;
    };

    const long ypow = 2L * static_cast<long>(v) - 2;
    auto integrand_low = [&](const RealHP& theta) {
        // y = cos(theta) maps [0, pi/6] onto [sqrt3/2, 1] smoothly
        const RealHP y = cos(theta);
        return h(y, true) * y.pow_int(ypow) * sin(theta);
    };
    auto integrand_high = [&](const RealHP& y) { return h(y, false) * y.pow_int(ypow); };

    // scale estimate: first diagonal term at the bottom of the domain
    RealHP scale = abs(a[1] * a[1]) * exp(-two_pi * y0 * RealHP(2L, work)) * y0.pow_int(ypow);
    RealHP tol = scale * ten_pow(-(prec + 8), work);

    const RealHP theta_max = [&] {
        RealHP t(work);
        mpfr_acos(t.raw(), y0.raw(), MPFR_RNDN);
        return t;
    }();
    RealHP low = integrate(integrand_low, RealHP(0L, work), theta_max, tol, work);
    RealHP high = integrate(integrand_high, RealHP(1L, work),
                            RealHP(Rat(mpq_class(y_max)), work), tol, work);
    RealHP value = low + high;

    // y-tail: integrand <= 4 S^2 e^{-4 pi y} y^{2v-2} past y_max, with
    // S bounding sum 2 n^v e^{-2 pi (n-1) y_max}
    RealHP S(0L, work);
    const RealHP ey = exp(-two_pi * RealHP(Rat(mpq_class(y_max)), work));
    RealHP eyp(1L, work);
    for (unsigned n = 1; n <= K; ++n) {
        S += RealHP(2L, work) * RealHP(Rat(static_cast<long>(n)), work).pow_int((long)v) * eyp;
        eyp = eyp * ey;
    }
    const double cminus = 4 * M_PI - double(ypow) / y_max;
    if (cminus <= 0) throw precision_infeasible("petersson_norm: y_max too small");
    RealHP y_tail = RealHP(4L, work) * S * S *
                    RealHP(Rat(mpq_class(y_max)), work).pow_int(ypow) *
                    exp(-two_pi * RealHP(2L, work) * RealHP(Rat(mpq_class(y_max)), work)) /
                    RealHP(Rat(mpq_class(cminus)), work);

    // q-tail: truncation error of h at the bottom row, times the integrated
    // envelope e^{-4 pi (y - y0)} y^{2v-2}
    RealHP A_full(0L, work);
    const RealHP x0 = exp(-two_pi * y0);
    RealHP x0p(1L, work);
    for (unsigned n = 1; n <= K; ++n) {
        x0p = x0p * x0;
        A_full += abs(a[n]) * x0p;
    }
    RealHP A_tail = RealHP(2L, work) *
                    RealHP(Rat(static_cast<long>(K + 1)), work).pow_int((long)v) * x0p * x0 /
                    (RealHP(1L, work) - RealHP(3L, work) * x0);
    RealHP err0 = A_tail * (RealHP(2L, work) * A_full + A_tail);
    RealHP env = RealHP(Rat(mpq_class(std::pow(2.0, double(2 * v - 3)))), work) *
                 (y0.pow_int(ypow) / (RealHP(4L, work) * pi) +
                  RealHP(factorial(2 * v - 2), work) /
                      (RealHP(4L, work) * pi).pow_int(2L * v - 1));
    RealHP q_tail = err0 * env;

    if (!(q_tail + y_tail < abs(value) * ten_pow(-(prec / 2), work)) || !(value.sign() > 0))
        throw precision_infeasible("petersson_norm: tail bounds exceed target accuracy "
                                   "(q_tail=" + q_tail.to_string(5) +
                                   ", y_tail=" + y_tail.to_string(5) + ")");
    return PeterssonNorm{value + RealHP(0L, prec), q_tail, y_tail};
}

namespace {

void check_params(const TruncationParams& params) {
    if (params.N < 1 || params.prec < 30)
        throw std::invalid_argument("TruncationParams: need N >= 1 and prec >= 30");
}

}  // namespace

WeightedSum weighted_sum_Df(unsigned v, const Eigenform& f, const RealHP& norm,
                            const TruncationParams& params) {
    if (v < 2) throw std::invalid_argument("weighted_sum_Df: v must be >= 2");
    check_params(params);
    const long work = params.prec + 10;
    const unsigned M = params.M;
    const unsigned N = params.N;

    // group by u = j + m: all (j, m) with the same u share D(f; N, 2v+2u+2),
    // and their Etilde values share the pi power so they add exactly
    RealHP value(0L, work);
    RealHP n_tail(0L, work);
    const unsigned u_max = (v - 2) + M;
    for (unsigned u = 0; u <= u_max; ++u) {
        Rat w;
        Rat w_abs;
        bool any = false;
        for (unsigned j = 0; j <= std::min(u, v - 2); ++j) {
            const unsigned m = u - j;
            if (m > M) continue;
            const PiRat e = etilde(v, j, m);
            w += e.r;
            w_abs += abs(e.r);
            any = true;
        }
        if (!any) continue;
        const long s = 2L * v + 2L * u + 2;
        const RealHP D = dirichlet_partial(f, N, s, work);
        const RealHP pi_pow = RealHP::pi(work).pow_int(-(2L * v - 1));
        value += RealHP(w, work) * pi_pow * D;
        n_tail += RealHP(w_abs, work) * pi_pow * dirichlet_tail_bound(v, N, s, work);
    }

    // m-tail: ratio of consecutive m-terms is (2v+m-1)/(9(m+1)) or smaller,
    // since D(f;N,s+2) <= D_abs majorant shrinking by >= 9 per step in s
    RealHP m_tail(0L, work);
    {
        const double rho = (2.0 * v + M) / (9.0 * (M + 2));
        if (rho >= 1)
            throw precision_infeasible("weighted_sum_Df: m-sum cutoff too small for tail bound");
        const RealHP geo(Rat(mpq_class(1.0 / (1.0 - rho))), work);
        const RealHP pi_pow = RealHP::pi(work).pow_int(-(2L * v - 1));
        for (unsigned j = 0; j <= v - 2; ++j) {
            const PiRat e = etilde(v, j, M + 1);
            const long s = 2L * v + 2L * j + 2L * (M + 1) + 2;
            // |D| <= 2 8^{-v} (3^{2v-s} + 4^{2v-s+1}/(s-2v-1))
            const RealHP d_abs =
                RealHP(2L, work) / RealHP(8L, work).pow_int((long)v) *
                (RealHP(3L, work).pow_int(2L * v - s) +
                 RealHP(4L, work).pow_int(2L * v - s + 1) /
                     RealHP(static_cast<long>(s - 2 * v - 1), work));
            m_tail += RealHP(abs(e.r), work) * pi_pow * d_abs * geo;
        }
    }

    WeightedSum out{(value / norm) + RealHP(0L, params.prec), RealHP(0L, params.prec)};
    out.tail_bound = (n_tail + m_tail) / abs(norm) + RealHP(0L, params.prec);
    return out;
}

WeightedSum weighted_sum_Df(unsigned v, const Eigenform& f, const TruncationParams& params) {
    const auto norm = petersson_norm(f, 2 * v, params.prec);
    return weighted_sum_Df(v, f, norm.value, params);
}

namespace {

struct TraceData {
    EigenformTable table;
    std::vector<WeightedSum> df;
};

const TraceData& trace_data(unsigned v, const TruncationParams& params) {
    static std::map<std::tuple<unsigned, unsigned, unsigned, long>, TraceData> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    const auto key = std::make_tuple(v, params.M, params.N, params.prec);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const unsigned long long max_odd = (params.N % 2 == 1) ? params.N : params.N - 1;
    const std::size_t coeff_order =
        static_cast<std::size_t>((max_odd * max_odd - 1) / 8);
    TraceData data;
    data.table = eigenforms_numeric(2 * v, coeff_order, params.prec);
    for (const auto& f : data.table.forms)
        data.df.push_back(weighted_sum_Df(v, f, params));
    return cache.emplace(key, std::move(data)).first->second;
}

}  // namespace

TraceValue hecke_trace(unsigned v, unsigned long long n, const TruncationParams& params) {
    if (!(v == 6 || v >= 8))
        throw std::invalid_argument("hecke_trace: v must lie in {6} union Z>=8");
    check_params(params);
    const TraceData& data = trace_data(v, params);
    const long work = params.prec + 5;
    RealHP acc(0L, work), tail(0L, work);
    for (std::size_t i = 0; i < data.table.forms.size(); ++i) {
        const RealHP a = data.table.forms[i].coeff(static_cast<std::size_t>(n), work);
        acc += data.df[i].value * a;
        tail += data.df[i].tail_bound * abs(a);
    }
    return TraceValue{acc + RealHP(0L, params.prec), tail + RealHP(0L, params.prec)};
}

Theorem3Report verify_theorem3(unsigned v, unsigned n_max, const TruncationParams& params,
                               const PartitionTable& p3) {
    if (!(v == 6 || v >= 8))
        throw std::invalid_argument("verify_theorem3: v must lie in {6} union Z>=8");
    if (p3.kind() != PartitionKind::colored || p3.t() != 3)
        throw std::invalid_argument("verify_theorem3: table must hold 3-colored partitions");
    if (p3.max_n() < n_max) throw truncation_error("verify_theorem3: p3 table too short");

    const long work = params.prec + 5;
    Theorem3Report rep;
    rep.v = v;
    rep.n_max = n_max;
    rep.params = params;

    const Rat sig_coeff = rat(-4L * v) * calE(v, 0, 0) / bernoulli(2 * v);
    RealHP max_resid(0L, work);
    RealHP max_env(0L, work);
    bool ok = true;
    for (unsigned long long n = 1; n <= n_max; ++n) {
        Rat exact = sig_coeff * rat(sigma(2 * v - 1, n));
        for (long long k = 1; triangular(k) <= static_cast<long long>(n); ++k) {
            Rat term = calE(v, n, static_cast<unsigned long long>(k)) *
                       rat(p3.at(static_cast<long long>(n) - triangular(k)));
            if (k % 2 == 0) term = -term;
            exact += term;
        }
        const TraceValue tr = hecke_trace(v, n, params);
        const Rat en0 = calE(v, n, 0);
        const RealHP formula = (RealHP(exact, work) + tr.value) / RealHP(en0, work);
        const RealHP resid = abs(RealHP(rat(p3.at(static_cast<long long>(n))), work) - formula);
        const RealHP env = tr.tail_bound / RealHP(abs(en0), work);
        if (resid > max_resid) max_resid = resid;
        if (env > max_env) max_env = env;
        if (resid > env) ok = false;
    }
    rep.max_residual = max_resid.to_string(8);
    rep.tail_bound = max_env.to_string(8);
    rep.below_envelope = ok;
    rep.status = ok ? "pass" : "fail";
    return rep;
}

}  // namespace partrec
