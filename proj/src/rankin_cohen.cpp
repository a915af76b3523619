#include "partrec/rankin_cohen.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "partrec/errors.hpp"
#include "partrec/half_gamma.hpp"
#include "partrec/modular_forms.hpp"

namespace partrec {

namespace {

// The Gamma skeleton of the bracket coefficient:
//   c_{r,s} = Gamma(v-3/2) Gamma(v+3/2) / (s! r! Gamma(r-3/2) Gamma(s+3/2)),
// rational for every r+s = v. Memoized per v: the (2k+1)- and
// (8n-(2k+1)^2)-dependent factors vary per term, this skeleton does not.
const std::vector<Rat>& bracket_skeleton(unsigned v) {
    static std::unordered_map<unsigned, std::vector<Rat>> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    std::vector<Rat> c(v + 1);
    for (unsigned r = 0; r <= v; ++r) {
        const unsigned s = v - r;
        HalfGammaRatio g;
        g.mul_gamma_half(2L * v - 3).mul_gamma_half(2L * v + 3);
        g.div_gamma_half(2L * r - 3).div_gamma_half(2L * s + 3);
        g.div_rat(rat(factorial(r) * factorial(s)));
        c[r] = g.as_rat();
    }
    return memo.emplace(v, std::move(c)).first->second;
}

}  // namespace

Rat calE(unsigned v, unsigned long long n, unsigned long long k) {
    const auto& c = bracket_skeleton(v);
    const Rat eight_pow = rat(1, 1) / rat(pow_int(Int(8), v));
    const Int odd = Int(static_cast<unsigned long>(2 * k + 1));
    const Int disc = Int(8) * Int(static_cast<unsigned long>(n)) - odd * odd;
    Rat acc;
    for (unsigned r = 0; r <= v; ++r) {
        const unsigned s = v - r;
        Rat term = c[r] * rat(pow_int(odd, 2 * s + 1) * pow_int(disc, r));
        if (r % 2 == 1) term = -term;
        acc += term;
    }
    return acc * eight_pow;
}

Int poly_P(unsigned v, const Int& x) {
    Int acc;
    for (unsigned r = 0; r <= v; ++r) {
        Int term = binomial(2 * v + 1, 2 * r) * Int((2L * r - 3) * (2L * r - 1)) * pow_int(x, r);
        if (r % 2 == 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

NonvanishingReport nonvanishing_sweep(unsigned v_max, unsigned long long n_max) {
    NonvanishingReport rep;
    rep.v_max = v_max;
    rep.n_max = n_max;
    rep.all_nonzero = true;
    bool first = true;
    for (unsigned v = 0; v <= v_max; ++v) {
        // E_v(n,0) = Gamma(v-3/2)Gamma(v+3/2) / ((2v+1)! 2^{v+1} pi) * P_v(8n-1):
        // the sweep runs on the integer polynomial and only scales the minimum.
        HalfGammaRatio g;
        g.mul_gamma_half(2L * v - 3).mul_gamma_half(2L * v + 3);
        g.div_rat(rat(factorial(2 * v + 1) * pow_int(Int(2), v + 1)));
        g.mul_pi(-1);
        const Rat scale = abs(g.as_pi_rat().r);  // |rational part|; pi power is zero here
        for (unsigned long long n = 1; n <= n_max; ++n) {
            const Int p = poly_P(v, Int(8) * Int(static_cast<unsigned long>(n)) - 1);
            if (p == 0) {
                rep.all_nonzero = false;
                throw std::logic_error("nonvanishing_sweep: E_v(n,0) vanished at v=" +
                                       std::to_string(v) + ", n=" + std::to_string(n));
            }
            Rat value = scale * rat(abs(p));
            if (first || value < rep.min_abs) {
                rep.min_abs = value;
                rep.argmin_v = v;
                rep.argmin_n = n;
                first = false;
            }
        }
    }
    return rep;
}

RvSeries rv_series(unsigned v, std::size_t N, const PartitionTable& p3) {
    if (p3.kind() != PartitionKind::colored || p3.t() != 3)
        throw std::invalid_argument("rv_series: table must hold 3-colored partitions");
    if (p3.max_n() < N) throw truncation_error("rv_series: p3 table shorter than N");
    TruncSeries s(N);
    for (std::size_t n = 0; n <= N; ++n) {
        Rat acc;
        for (long long k = 0; triangular(k) <= static_cast<long long>(n); ++k) {
            Rat term = calE(v, n, static_cast<unsigned long long>(k)) *
                       rat(p3.at(static_cast<long long>(n) - triangular(k)));
            if (k % 2 == 1) term = -term;
            acc += term;
        }
        s.set(n, acc);
    }
    return {v, std::move(s)};
}

RvSeries rv_series_direct(unsigned v, std::size_t N) {
    // p3 via the generic series inverse, independent of the kernel tables
    const TruncSeries p3 = euler_product(N).pow(3).invert();
    const auto& c = bracket_skeleton(v);

    TruncSeries acc(N);
    for (unsigned r = 0; r <= v; ++r) {
        const unsigned s = v - r;
        // D^r of q^{-1/8} sum p3(m) q^m: term m picks up (m - 1/8)^r
        TruncSeries f(N);
        for (std::size_t m = 0; m <= N; ++m)
            f.set(m, p3[m] * pow_rat(rat(8 * static_cast<long>(m) - 1, 8), r));
        // D^s of q^{1/8} sum (-1)^k (2k+1) q^{T_k}: term k picks up (T_k + 1/8)^s
        TruncSeries g(N);
        for (long long k = 0; triangular(k) <= static_cast<long long>(N); ++k) {
            Rat coeff = rat((k % 2 == 0) ? (2 * k + 1) : -(2 * k + 1)) *
                        pow_rat(rat(8 * triangular(k) + 1, 8), s);
            g.set(static_cast<std::size_t>(triangular(k)), coeff);
        }
        TruncSeries term = (f * g).scaled(c[r]);
        if (r % 2 == 1) term = -term;
        acc = acc + term;
    }
    return {v, std::move(acc)};
}

Rat alpha(unsigned v) { return calE(v, 0, 0); }

bool theorem2_has_cusp_term(unsigned v) {
    return v == 6 || v == 8 || v == 9 || v == 10 || v == 11 || v == 13;
}

bool theorem2_supported(unsigned v) {
    return theorem2_has_cusp_term(v) || v == 2 || v == 3 || v == 4 || v == 5 || v == 7;
}

Rat beta(unsigned v) {
    if (!theorem2_has_cusp_term(v))
        throw std::invalid_argument("beta: defined only for v in {6,8,9,10,11,13}");
    return rat(4L * v) * calE(v, 0, 0) / bernoulli(2 * v) + rat(3) * calE(v, 1, 0) -
           calE(v, 1, 1);
}

Theorem2Report verify_theorem2(unsigned v, std::size_t N, const PartitionTable& p3) {
    if (!theorem2_supported(v))
        throw std::invalid_argument("verify_theorem2: v must be in {2,3,4,5,7} or "
                                    "{6,8,9,10,11,13}");
    Theorem2Report rep;
    rep.v = v;
    rep.N = N;
    rep.alpha = alpha(v);

    const RvSeries rv = rv_series(v, N, p3);
    TruncSeries expected = eisenstein(2 * v, N).series.scaled(rep.alpha);
    if (theorem2_has_cusp_term(v)) {
        rep.beta = beta(v);
        const auto delta = cusp_eigenform_1dim(2 * v, N);
        TruncSeries cusp(N);
        for (std::size_t n = 0; n <= N; ++n)
            cusp.set(n, rat(delta.forms[0].exact[n]) * *rep.beta);
        expected = expected + cusp;
    }
    rep.ok = true;
    for (std::size_t n = 0; n <= N; ++n) {
        if (rv.series[n] != expected[n]) {
            rep.ok = false;
            rep.first_mismatch = n;
            break;
        }
    }
    return rep;
}

Rat p3_from_theorem2(unsigned v, std::size_t n, const PartitionTable& p3) {
    if (!theorem2_supported(v)) throw std::invalid_argument("p3_from_theorem2: unsupported v");
    if (n == 0) throw std::invalid_argument("p3_from_theorem2: n must be positive");
    Rat acc = rat(-4L * v) * alpha(v) / bernoulli(2 * v) * rat(sigma(2 * v - 1, n));
    if (theorem2_has_cusp_term(v)) {
        const auto delta = cusp_eigenform_1dim(2 * v, n);
        acc += beta(v) * rat(delta.forms[0].exact[n]);
    }
    for (long long k = 1; triangular(k) <= static_cast<long long>(n); ++k) {
        Rat term = calE(v, n, static_cast<unsigned long long>(k)) *
                   rat(p3.at(static_cast<long long>(n) - triangular(k)));
        if (k % 2 == 0) term = -term;
        acc += term;
    }
    return acc / calE(v, n, 0);
}

}  // namespace partrec
