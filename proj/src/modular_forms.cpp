#include "partrec/modular_forms.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>

#include "partrec/errors.hpp"
#include "partrec/series_kernel.hpp"

namespace partrec {

Rat bernoulli(unsigned m) {
    if (m == 0) return rat(1);
    if (m % 2 != 0) throw std::invalid_argument("bernoulli: m must be even and positive");
    std::vector<Rat> b(m + 1);
    b[0] = rat(1);
    for (unsigned j = 1; j <= m; ++j) {
        Rat acc;
        for (unsigned k = 0; k < j; ++k) {
            if (b[k] == 0) continue;
            acc += rat(binomial(j + 1, k)) * b[k];
        }
        b[j] = -acc / rat(j + 1);
    }
    return b[m];
}

Int sigma(unsigned e, unsigned long long n) {
    if (n == 0) throw std::invalid_argument("sigma: n must be >= 1");
    Int acc;
    for (unsigned long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        acc += pow_int(Int(static_cast<unsigned long>(d)), e);
        const unsigned long long q = n / d;
        if (q != d) acc += pow_int(Int(static_cast<unsigned long>(q)), e);
    }
    return acc;
}

namespace {

// sigma_e(1..N) by sieving multiples of each divisor.
std::vector<Int> sigma_sieve(unsigned e, std::size_t N) {
    std::vector<Int> out(N + 1);
    for (std::size_t d = 1; d <= N; ++d) {
        const Int de = pow_int(Int(static_cast<unsigned long>(d)), e);
        for (std::size_t m = d; m <= N; m += d) out[m] += de;
    }
    return out;
}

}  // namespace

EisensteinSeries eisenstein(unsigned weight, std::size_t N) {
    if (weight < 2 || weight % 2 != 0)
        throw std::invalid_argument("eisenstein: weight must be even and >= 2");
    const unsigned v = weight / 2;
    const Rat c = rat(-4L * v) / bernoulli(weight);
    TruncSeries s(N);
    s.set(0, rat(1));
    const auto sig = sigma_sieve(weight - 1, N);
    for (std::size_t n = 1; n <= N; ++n) s.set(n, c * rat(sig[n]));
    return {weight, std::move(s)};
}

std::vector<Int> eisenstein_int_coeffs(unsigned weight, std::size_t N) {
    if (weight < 4 || weight % 2 != 0)
        throw std::invalid_argument("eisenstein_int_coeffs: even weight >= 4 required");
    const unsigned v = weight / 2;
    const Rat c = rat(-4L * v) / bernoulli(weight);
    if (c.get_den() != 1)
        throw std::invalid_argument("eisenstein_int_coeffs: expansion not integral at weight " +
                                    std::to_string(weight));
    const Int ci = c.get_num();
    std::vector<Int> out(N + 1);
    out[0] = 1;
    const auto sig = sigma_sieve(weight - 1, N);
    for (std::size_t n = 1; n <= N; ++n) out[n] = ci * sig[n];
    return out;
}

std::vector<Int> delta_coeffs(std::size_t N) {
    // Delta = q ((q;q)^3)^8; each pass is a sparse multiply with the
    // triangular-number expansion.
    if (N == 0) return {Int(0)};
    const auto t3 = triple_sparse(N - 1);
    std::vector<Int> acc(N, Int(0));
    acc[0] = 1;
    for (int pass = 0; pass < 8; ++pass) acc = mul_sparse(acc, t3, N - 1);
    std::vector<Int> out(N + 1);
    for (std::size_t i = 0; i + 1 <= N; ++i) out[i + 1] = std::move(acc[i]);
    return out;
}

TruncSeries delta_series(std::size_t N) {
    const auto tau = delta_coeffs(N);
    TruncSeries s(N);
    for (std::size_t n = 0; n <= N; ++n) s.set(n, rat(tau[n]));
    return s;
}

unsigned dim_cusp(unsigned weight) {
    if (weight % 2 != 0) return 0;
    if (weight < 12) return 0;
    const unsigned k = weight;
    unsigned dim_m = (k % 12 == 2) ? k / 12 : k / 12 + 1;
    return dim_m - 1;
}

RealHP Eigenform::coeff(std::size_t n, long prec) const {
    if (is_exact()) {
        if (n >= exact.size()) throw truncation_error("Eigenform: coefficient beyond table");
        return RealHP(exact[n], prec);
    }
    if (n >= numeric.size()) throw truncation_error("Eigenform: coefficient beyond table");
    return numeric[n];
}

namespace {

// E4^a * E6^b * Delta^pow, all integral, truncated at N.
std::vector<Int> monomial_int(unsigned a, unsigned b, unsigned delta_pow, std::size_t N) {
    std::vector<Int> acc(N + 1, Int(0));
    acc[0] = 1;
    const auto mul_pow = [&](const std::vector<Int>& base, unsigned e) {
        for (unsigned i = 0; i < e; ++i) acc = mul_dense(acc, base, N);
    };
    if (a > 0) mul_pow(eisenstein_int_coeffs(4, N), a);
    if (b > 0) mul_pow(eisenstein_int_coeffs(6, N), b);
    if (delta_pow > 0) mul_pow(delta_coeffs(N), delta_pow);
    return acc;
}

// Decomposes an even weight w >= 0, w != 2, as 4a + 6b with b in {0,1}.
void weight_to_e4e6(unsigned w, unsigned& a, unsigned& b) {
    if (w % 2 != 0 || w == 2) throw std::logic_error("weight_to_e4e6: bad weight");
    if (w % 4 == 0) {
        a = w / 4;
        b = 0;
    } else {
        a = (w - 6) / 4;
        b = 1;
    }
}

}  // namespace

EigenformTable cusp_eigenform_1dim(unsigned weight, std::size_t N) {
    static const unsigned supported[] = {12, 16, 18, 20, 22, 26};
    if (std::find(std::begin(supported), std::end(supported), weight) == std::end(supported))
        throw std::invalid_argument("cusp_eigenform_1dim: weight must be one of "
                                    "12, 16, 18, 20, 22, 26");
    unsigned a = 0, b = 0;
    weight_to_e4e6(weight - 12, a, b);
    Eigenform f;
    f.exact = monomial_int(a, b, 1, N);
    return EigenformTable{weight, 1, 0, {std::move(f)}};
}

std::vector<std::vector<Int>> victor_miller_cusp_basis_int(unsigned weight, std::size_t N) {
    const unsigned d = dim_cusp(weight);
    std::vector<std::vector<Int>> basis;
    if (d == 0) return basis;
    if (N < d) throw truncation_error("victor_miller_cusp_basis: order below dimension");
    basis.resize(d);
    for (unsigned i = 1; i <= d; ++i) {
        unsigned a = 0, b = 0;
        weight_to_e4e6(weight - 12 * i, a, b);
        basis[i - 1] = monomial_int(a, b, i, N);
    }
    // echelonize: clear columns i+1..d of g_i using the later rows
    for (unsigned i = d; i >= 1; --i) {
        auto& g = basis[i - 1];
        for (unsigned l = i + 1; l <= d; ++l) {
            const Int c = g[l];
            if (c == 0) continue;
            const auto& gl = basis[l - 1];
            for (std::size_t m = l; m <= N; ++m) g[m] -= c * gl[m];
        }
        if (g[i] != 1) throw std::logic_error("victor_miller_cusp_basis: pivot is not 1");
    }
    return basis;
}

std::vector<TruncSeries> victor_miller_cusp_basis(unsigned weight, std::size_t N) {
    std::vector<TruncSeries> out;
    for (const auto& g : victor_miller_cusp_basis_int(weight, N)) {
        TruncSeries s(N);
        for (std::size_t n = 0; n <= N; ++n) s.set(n, rat(g[n]));
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<Rat>> hecke_t2_matrix(unsigned weight,
                                              const std::vector<std::vector<Int>>& basis) {
    const std::size_t d = basis.size();
    if (d == 0) return {};
    for (const auto& g : basis)
        if (g.size() < 2 * (d + 1) + 1)
            throw truncation_error("hecke_t2_matrix: basis truncated below 2(d+1)");
    const Int two_pow = pow_int(Int(2), weight - 1);
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 1; j <= d; ++j) {
            Int c = basis[i][2 * j];
            if (j % 2 == 0) c += two_pow * basis[i][j / 2];
            m[j - 1][i] = rat(c);
        }
    }
    return m;
}

std::vector<std::vector<Rat>> hecke_t2_matrix(unsigned weight,
                                              const std::vector<TruncSeries>& basis) {
    std::vector<std::vector<Int>> ib;
    ib.reserve(basis.size());
    for (const auto& s : basis) {
        std::vector<Int> v(s.order() + 1);
        for (std::size_t n = 0; n <= s.order(); ++n) {
            if (s[n].get_den() != 1)
                throw std::invalid_argument("hecke_t2_matrix: basis is not integral");
            v[n] = s[n].get_num();
        }
        ib.push_back(std::move(v));
    }
    return hecke_t2_matrix(weight, ib);
}

namespace {

// Characteristic polynomial of an exact matrix by Faddeev-LeVerrier;
// returns monic coefficients c[0..d] with c[d] = 1.
std::vector<Rat> char_poly(const std::vector<std::vector<Rat>>& m) {
    const std::size_t d = m.size();
    std::vector<Rat> c(d + 1);
    c[d] = rat(1);
    std::vector<std::vector<Rat>> acc(d, std::vector<Rat>(d));  // M_1 = A
    auto mat_mul = [&](const std::vector<std::vector<Rat>>& x) {
        std::vector<std::vector<Rat>> r(d, std::vector<Rat>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k) {
                if (x[i][k] == 0) continue;
                for (std::size_t j = 0; j < d; ++j) r[i][j] += x[i][k] * m[k][j];
            }
        return r;
    };
    acc = m;
    for (std::size_t k = 1; k <= d; ++k) {
        Rat tr;
        for (std::size_t i = 0; i < d; ++i) tr += acc[i][i];
        c[d - k] = -tr / rat(static_cast<long>(k));
        if (k == d) break;
        for (std::size_t i = 0; i < d; ++i) acc[i][i] += c[d - k];
        acc = mat_mul(acc);
    }
    return c;
}

// Double-precision roots by Durand-Kerner, as seeds for high-precision Newton.
std::vector<std::complex<double>> roots_seed(const std::vector<Rat>& c) {
    const std::size_t d = c.size() - 1;
    std::vector<double> cd(d + 1);
    double scale = 0;
    for (std::size_t i = 0; i <= d; ++i) {
        cd[i] = c[i].get_d();
        if (i < d) scale = std::max(scale, std::abs(cd[i]));
    }
    const double radius = 1.0 + scale;  // Cauchy bound
    std::vector<std::complex<double>> z(d);
    for (std::size_t i = 0; i < d; ++i)
        z[i] = std::polar(radius * (0.5 + 0.1 * double(i)),
                          0.4 + 2.0 * M_PI * double(i) / double(d));
    auto eval = [&](std::complex<double> x) {
        std::complex<double> p = cd[d];
        for (std::size_t i = d; i-- > 0;) p = p * x + cd[i];
        return p;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0;
        for (std::size_t i = 0; i < d; ++i) {
            std::complex<double> den = 1.0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) den *= z[i] - z[j];
            const auto delta = eval(z[i]) / den;
            z[i] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-13 * radius) break;
    }
    return z;
}

RealHP newton_polish(const std::vector<Rat>& c, double seed, long prec) {
    const std::size_t d = c.size() - 1;
    std::vector<RealHP> chp;
    chp.reserve(d + 1);
    for (const auto& ci : c) chp.emplace_back(ci, prec);
    RealHP x(Rat(seed), prec);
    auto eval = [&](const RealHP& t, bool deriv) {
        RealHP p(0L, prec);
        if (!deriv) {
            for (std::size_t i = d + 1; i-- > 0;) p = p * t + chp[i];
        } else {
            for (std::size_t i = d + 1; i-- > 1;) p = p * t + chp[i] * RealHP(long(i), prec);
        }
        return p;
    };
    for (int it = 0; it < 200; ++it) {
        const RealHP f = eval(x, false);
        const RealHP df = eval(x, true);
        if (df.sign() == 0) throw std::runtime_error("eigenvalue Newton: zero derivative");
        const RealHP step = f / df;
        x -= step;
        RealHP tol = abs(x) + RealHP(1L, prec);
        // stop once the step is below the target precision
        RealHP eps = RealHP(Rat(1), prec);
        eps = eps / RealHP(Int(pow_int(Int(10), static_cast<unsigned long>(prec + 5))), prec);
        if (abs(step) < tol * eps) break;
    }
    return x;
}

}  // namespace

EigenformTable eigenforms_numeric(unsigned weight, std::size_t N, long prec_digits) {
    const unsigned d = dim_cusp(weight);
    if (d == 0) return EigenformTable{weight, 0, prec_digits, {}};
    if (d == 1) {
        auto table = cusp_eigenform_1dim(weight, N);
        table.prec_digits = prec_digits;
        return table;
    }
    const std::size_t order = std::max<std::size_t>(N, 2 * (d + 1));
    const auto basis = victor_miller_cusp_basis_int(weight, order);
    const auto t2 = hecke_t2_matrix(weight, basis);
    const auto cp = char_poly(t2);
    const auto seeds = roots_seed(cp);
    for (const auto& z : seeds)
        if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z.real())))
            throw std::runtime_error("eigenforms_numeric: complex T_2 eigenvalue seed");
    std::vector<double> vals(d);
    for (unsigned i = 0; i < d; ++i) vals[i] = seeds[i].real();
    std::sort(vals.begin(), vals.end());
    for (unsigned i = 0; i + 1 < d; ++i)
        if (!(vals[i + 1] - vals[i] > 1e-6 * (1.0 + std::abs(vals[i]))))
            throw std::runtime_error("eigenforms_numeric: eigenvalue collision");

    EigenformTable table{weight, d, prec_digits, {}};
    for (unsigned i = 0; i < d; ++i) {
        const RealHP lam = newton_polish(cp, vals[i], prec_digits);
        // solve (T2 - lam) x = 0 with x_1 = 1 from the first d-1 rows
        std::vector<std::vector<RealHP>> a;
        for (std::size_t r = 0; r + 1 < d; ++r) {
            std::vector<RealHP> row;
            for (std::size_t cidx = 1; cidx < d; ++cidx) {
                RealHP e(t2[r][cidx], prec_digits);
                if (r == cidx) e -= lam;
                row.push_back(std::move(e));
            }
            RealHP rhs = -RealHP(t2[r][0], prec_digits);
            if (r == 0) rhs += lam;
            row.push_back(std::move(rhs));
            a.push_back(std::move(row));
        }
        // Gaussian elimination with partial pivoting
        const std::size_t m = d - 1;
        for (std::size_t col = 0; col < m; ++col) {
            std::size_t piv = col;
            for (std::size_t r = col + 1; r < m; ++r)
                if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
            std::swap(a[col], a[piv]);
            if (a[col][col].sign() == 0)
                throw std::runtime_error("eigenforms_numeric: singular eigenvector system");
            for (std::size_t r = col + 1; r < m; ++r) {
                const RealHP f = a[r][col] / a[col][col];
                for (std::size_t cc = col; cc <= m; ++cc) a[r][cc] -= f * a[col][cc];
            }
        }
        std::vector<RealHP> x(m, RealHP(0L, prec_digits));
        for (std::size_t r = m; r-- > 0;) {
            RealHP acc = a[r][m];
            for (std::size_t cc = r + 1; cc < m; ++cc) acc -= a[r][cc] * x[cc];
            x[r] = acc / a[r][r];
        }
        Eigenform f;
        f.numeric.reserve(order + 1);
        for (std::size_t n = 0; n <= order; ++n) {
            RealHP acc(basis[0][n], prec_digits);
            for (std::size_t j = 1; j < d; ++j) acc += x[j - 1] * RealHP(basis[j][n], prec_digits);
            f.numeric.push_back(std::move(acc));
        }
        table.forms.push_back(std::move(f));
    }
    std::sort(table.forms.begin(), table.forms.end(), [&](const Eigenform& f1, const Eigenform& f2) {
        return f1.numeric[2] < f2.numeric[2];
    });
    return table;
}

}  // namespace partrec
