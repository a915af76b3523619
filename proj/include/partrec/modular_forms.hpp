#pragma once

#include <cstddef>
#include <vector>

#include "partrec/rational.hpp"
#include "partrec/real_hp.hpp"
#include "partrec/trunc_series.hpp"

namespace partrec {

/// Exact 2v-th Bernoulli number via sum_{k=0}^{m} C(m+1,k) B_k = 0.
Rat bernoulli(unsigned m);

/// sigma_e(n) = sum of d^e over divisors d of n.
Int sigma(unsigned e, unsigned long long n);

struct EisensteinSeries {
    unsigned weight;     // 2v
    TruncSeries series;  // 1 - (4v/B_2v) sum sigma_{2v-1}(n) q^n
};

/// E_{2v} to order N. Weight 2 is the quasi-modular E_2; it is exposed for
/// expansion cross-checks only and never enters the decompositions.
EisensteinSeries eisenstein(unsigned weight, std::size_t N);

/// Integer coefficient array of E_{2v} for the weights whose expansion is
/// integral (4v/B_2v an integer: 4, 6, 8, 10, 14, ...); throws otherwise.
/// The eigenform constructions only need E4 and E6.
std::vector<Int> eisenstein_int_coeffs(unsigned weight, std::size_t N);

/// q (q;q)_inf^24 to order N; coefficient of q^n is tau(n).
TruncSeries delta_series(std::size_t N);

/// Integer tau(0..N) (index n holds tau(n); tau(0) = 0).
std::vector<Int> delta_coeffs(std::size_t N);

/// dim S_k(1) for even k >= 0.
unsigned dim_cusp(unsigned weight);

/// One normalized Hecke eigenform; exact integer coefficients for the
/// one-dimensional spaces, high-precision reals above that.
struct Eigenform {
    std::vector<Int> exact;       // a(0..N); empty when numeric
    std::vector<RealHP> numeric;  // a(0..N); empty when exact
    bool is_exact() const { return !exact.empty(); }
    std::size_t max_n() const { return (is_exact() ? exact.size() : numeric.size()) - 1; }
    RealHP coeff(std::size_t n, long prec) const;
};

struct EigenformTable {
    unsigned weight;
    unsigned dim;
    long prec_digits;             // 0 for all-exact tables
    std::vector<Eigenform> forms; // sorted by ascending a(2)
};

/// The unique normalized cusp form of weight 2v in {12,16,18,20,22,26},
/// built as Delta * E4^a * E6^b.
EigenformTable cusp_eigenform_1dim(unsigned weight, std::size_t N);

/// Echelonized integral cusp basis g_i = q^i + O(q^{d+1}), i = 1..d, from
/// monomials Delta^i E4^a E6^b.
std::vector<TruncSeries> victor_miller_cusp_basis(unsigned weight, std::size_t N);
std::vector<std::vector<Int>> victor_miller_cusp_basis_int(unsigned weight, std::size_t N);

/// Exact matrix of T_2 in the echelon basis: a_{T2 f}(n) = a_f(2n) + 2^{2v-1} a_f(n/2).
std::vector<std::vector<Rat>> hecke_t2_matrix(unsigned weight,
                                              const std::vector<std::vector<Int>>& basis);
std::vector<std::vector<Rat>> hecke_t2_matrix(unsigned weight,
                                              const std::vector<TruncSeries>& basis);

/// Hecke eigenforms of S_{2v}(1) to prec digits, sorted by ascending a(2).
/// Dimension-1 spaces return the exact form; higher dimensions diagonalize
/// the exact T_2 matrix numerically.
EigenformTable eigenforms_numeric(unsigned weight, std::size_t N, long prec_digits);

}  // namespace partrec
