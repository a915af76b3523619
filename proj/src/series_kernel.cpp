#include "partrec/series_kernel.hpp"

#include <algorithm>
#include <cstring>

#include "partrec/errors.hpp"
#include "partrec/parallel.hpp"
#include "partrec/trunc_series.hpp"

namespace partrec {

std::vector<SparseTerm> euler_sparse(std::size_t N, unsigned t) {
    if (t == 0) throw std::invalid_argument("euler_sparse: t must be >= 1");
    std::vector<SparseTerm> out;
    out.push_back({0, 1});
    const long long lim = static_cast<long long>(N);
    for (long long j = 1;; ++j) {
        const long long wn = static_cast<long long>(t) * pentagonal(-j);
        const long long wp = static_cast<long long>(t) * pentagonal(j);
        if (wn > lim) break;
        const long long sign = (j % 2 == 0) ? 1 : -1;
        out.push_back({wn, sign});
        if (wp <= lim) out.push_back({wp, sign});
    }
    std::sort(out.begin(), out.end(),
              [](const SparseTerm& x, const SparseTerm& y) { return x.exp < y.exp; });
    return out;
}

std::vector<SparseTerm> triple_sparse(std::size_t N) {
    std::vector<SparseTerm> out;
    for (long long k = 0; triangular(k) <= static_cast<long long>(N); ++k)
        out.push_back({triangular(k), (k % 2 == 0) ? (2 * k + 1) : -(2 * k + 1)});
    return out;
}

std::vector<Int> mul_sparse(const std::vector<Int>& a, const std::vector<SparseTerm>& s,
                            std::size_t N) {
    std::vector<Int> out(N + 1);
    const std::size_t na = std::min(a.size(), N + 1);
    for (const auto& term : s) {
        if (term.exp > static_cast<long long>(N)) break;
        const std::size_t e = static_cast<std::size_t>(term.exp);
        const std::size_t hi = std::min(na, N + 1 - e);
        if (term.coeff >= 0) {
            const unsigned long c = static_cast<unsigned long>(term.coeff);
            for (std::size_t i = 0; i < hi; ++i)
                mpz_addmul_ui(out[e + i].get_mpz_t(), a[i].get_mpz_t(), c);
        } else {
            const unsigned long c = static_cast<unsigned long>(-term.coeff);
            for (std::size_t i = 0; i < hi; ++i)
                mpz_submul_ui(out[e + i].get_mpz_t(), a[i].get_mpz_t(), c);
        }
    }
    return out;
}

std::vector<Int> div_sparse(const std::vector<Int>& a, const std::vector<SparseTerm>& s,
                            std::size_t N) {
    if (s.empty() || s.front().exp != 0 || s.front().coeff != 1)
        throw non_invertible("div_sparse: divisor must have constant term 1");
    std::vector<Int> out(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        Int acc = (n < a.size()) ? a[n] : Int(0);
        for (std::size_t k = 1; k < s.size(); ++k) {
            const long long e = s[k].exp;
            if (e > static_cast<long long>(n)) break;
            const std::size_t idx = n - static_cast<std::size_t>(e);
            if (s[k].coeff >= 0)
                mpz_submul_ui(acc.get_mpz_t(), out[idx].get_mpz_t(),
                              static_cast<unsigned long>(s[k].coeff));
            else
                mpz_addmul_ui(acc.get_mpz_t(), out[idx].get_mpz_t(),
                              static_cast<unsigned long>(-s[k].coeff));
        }
        out[n] = std::move(acc);
    }
    return out;
}

std::vector<Int> mul_dense_schoolbook(const std::vector<Int>& a, const std::vector<Int>& b,
                                      std::size_t N) {
    std::vector<Int> out(N + 1);
    const std::size_t na = std::min(a.size(), N + 1);
    parallel_for(
        N + 1,
        [&](std::size_t lo, std::size_t hi) {
            for (std::size_t n = lo; n < hi; ++n) {
                Int acc;
                const std::size_t imax = std::min(na - 1, n);
                for (std::size_t i = 0; i <= imax; ++i) {
                    const std::size_t j = n - i;
                    if (j >= b.size()) continue;
                    if (mpz_sgn(a[i].get_mpz_t()) == 0 || mpz_sgn(b[j].get_mpz_t()) == 0)
                        continue;
                    mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
                }
                out[n] = std::move(acc);
            }
        },
        256);
    return out;
}

namespace {

// Splits v into nonnegative (positive part, negative part) coefficient arrays.
void sign_split(const std::vector<Int>& v, std::vector<Int>& pos, std::vector<Int>& neg) {
    pos.assign(v.size(), Int(0));
    neg.assign(v.size(), Int(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        const int s = mpz_sgn(v[i].get_mpz_t());
        if (s > 0)
            pos[i] = v[i];
        else if (s < 0)
            neg[i] = -v[i];
    }
}

std::size_t max_bits(const std::vector<Int>& v) {
    std::size_t bits = 1;
    for (const auto& x : v)
        if (mpz_sgn(x.get_mpz_t()) != 0)
            bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
    return bits;
}

// Packs nonnegative coefficients into slot_words 64-bit words each and
// multiplies as single large integers; the product's slots are the
// convolution, provided slots never overflow.
std::vector<Int> kronecker_nonneg(const std::vector<Int>& a, const std::vector<Int>& b,
                                  std::size_t N, std::size_t slot_words) {
    const std::size_t na = std::min(a.size(), N + 1);
    const std::size_t nb = std::min(b.size(), N + 1);
    auto pack = [&](const std::vector<Int>& v, std::size_t n) {
        std::vector<uint64_t> buf(n * slot_words, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (mpz_sgn(v[i].get_mpz_t()) == 0) continue;
            std::size_t words = 0;
            mpz_export(buf.data() + i * slot_words, &words, -1, sizeof(uint64_t), 0, 0,
                       v[i].get_mpz_t());
        }
        Int big;
        mpz_import(big.get_mpz_t(), buf.size(), -1, sizeof(uint64_t), 0, 0, buf.data());
        return big;
    };
    Int pa = pack(a, na);
    Int pb = pack(b, nb);
    Int prod = pa * pb;

    // the full product spans up to (na+nb) slots; export it all, read N+1
    const std::size_t prod_words =
        (mpz_sizeinbase(prod.get_mpz_t(), 2) + 63) / 64;
    std::vector<uint64_t> buf(std::max(prod_words, (N + 1) * slot_words) + slot_words, 0);
    std::size_t words = 0;
    mpz_export(buf.data(), &words, -1, sizeof(uint64_t), 0, 0, prod.get_mpz_t());
    std::vector<Int> out(N + 1);
    for (std::size_t n = 0; n <= N; ++n)
        mpz_import(out[n].get_mpz_t(), slot_words, -1, sizeof(uint64_t), 0, 0,
                   buf.data() + n * slot_words);
    return out;
}

}  // namespace

std::vector<Int> mul_dense(const std::vector<Int>& a, const std::vector<Int>& b, std::size_t N) {
    if (N + 1 <= 128) return mul_dense_schoolbook(a, b, N);

    // slot must hold (N+1) * max|a_i| * max|b_j|
    const std::size_t bits = max_bits(a) + max_bits(b) + 64 - __builtin_clzll(N + 1) + 2;
    const std::size_t slot_words = (bits + 63) / 64;

    std::vector<Int> ap, an, bp, bn;
    sign_split(a, ap, an);
    sign_split(b, bp, bn);
    auto pp = kronecker_nonneg(ap, bp, N, slot_words);
    auto nn = kronecker_nonneg(an, bn, N, slot_words);
    auto pn = kronecker_nonneg(ap, bn, N, slot_words);
    auto np = kronecker_nonneg(an, bp, N, slot_words);
    std::vector<Int> out(N + 1);
    for (std::size_t n = 0; n <= N; ++n) out[n] = pp[n] + nn[n] - pn[n] - np[n];
    return out;
}

}  // namespace partrec
