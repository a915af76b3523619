#pragma once

#include <cstddef>
#include <vector>

#include "partrec/rational.hpp"

namespace partrec {

/// Dense integer-coefficient series kernel. The classical eta-power series
/// are sparse (O(sqrt N) terms with small integer coefficients), so partition
/// tables and eigenform q-expansions are built from sparse multiply/divide
/// passes instead of generic Rat convolutions. Dense*dense products go
/// through Kronecker substitution so GMP's large-integer multiply does the
/// heavy lifting.

struct SparseTerm {
    long long exp;
    long long coeff;
};

/// Pentagonal expansion of (q^t; q^t)_inf, terms with exponent <= N.
std::vector<SparseTerm> euler_sparse(std::size_t N, unsigned t = 1);

/// Triangular expansion of (q;q)_inf^3, terms with exponent <= N.
std::vector<SparseTerm> triple_sparse(std::size_t N);

/// a * s truncated at N.
std::vector<Int> mul_sparse(const std::vector<Int>& a, const std::vector<SparseTerm>& s,
                            std::size_t N);

/// a / s truncated at N; s must have constant term 1.
std::vector<Int> div_sparse(const std::vector<Int>& a, const std::vector<SparseTerm>& s,
                            std::size_t N);

/// Dense truncated product, schoolbook convolution (reference path).
std::vector<Int> mul_dense_schoolbook(const std::vector<Int>& a, const std::vector<Int>& b,
                                      std::size_t N);

/// Dense truncated product via Kronecker substitution: coefficients are
/// packed into slots of one large integer per sign-split factor and the four
/// nonnegative products are recombined. Bit-exact with the schoolbook path.
std::vector<Int> mul_dense(const std::vector<Int>& a, const std::vector<Int>& b, std::size_t N);

}  // namespace partrec
