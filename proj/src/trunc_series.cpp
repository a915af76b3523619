#include "partrec/trunc_series.hpp"

#include <utility>

#include "partrec/errors.hpp"
#include "partrec/parallel.hpp"

namespace partrec {

namespace {

constexpr std::size_t kDivideConquerThreshold = 96;
constexpr std::size_t kParallelThreshold = 512;

// Full (untruncated) schoolbook product of two coefficient vectors.
std::vector<Rat> full_mul_schoolbook(const Rat* a, std::size_t na, const Rat* b, std::size_t nb) {
    if (na == 0 || nb == 0) return {};
    std::vector<Rat> out(na + nb - 1);
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < nb; ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::vector<Rat> full_mul_karatsuba(const Rat* a, std::size_t na, const Rat* b, std::size_t nb) {
    if (na < kDivideConquerThreshold || nb < kDivideConquerThreshold)
        return full_mul_schoolbook(a, na, b, nb);
    const std::size_t h = std::max(na, nb) / 2;
    if (na <= h) {
        // b splits, a does not: a*(b0 + x^h b1)
        auto lo = full_mul_karatsuba(a, na, b, h);
        auto hi = full_mul_karatsuba(a, na, b + h, nb - h);
        std::vector<Rat> out(na + nb - 1);
        for (std::size_t i = 0; i < lo.size(); ++i) out[i] += lo[i];
        for (std::size_t i = 0; i < hi.size(); ++i) out[i + h] += hi[i];
        return out;
    }
    if (nb <= h) return full_mul_karatsuba(b, nb, a, na);

    // a = a0 + x^h a1, b = b0 + x^h b1
    const Rat* a0 = a;
    const Rat* a1 = a + h;
    const std::size_t na1 = na - h;
    const Rat* b0 = b;
    const Rat* b1 = b + h;
    const std::size_t nb1 = nb - h;

    auto z0 = full_mul_karatsuba(a0, h, b0, h);
    auto z2 = full_mul_karatsuba(a1, na1, b1, nb1);
    std::vector<Rat> sa(std::max(h, na1)), sb(std::max(h, nb1));
    for (std::size_t i = 0; i < h; ++i) sa[i] = a0[i];
    for (std::size_t i = 0; i < na1; ++i) sa[i] += a1[i];
    for (std::size_t i = 0; i < h; ++i) sb[i] = b0[i];
    for (std::size_t i = 0; i < nb1; ++i) sb[i] += b1[i];
    auto z1 = full_mul_karatsuba(sa.data(), sa.size(), sb.data(), sb.size());
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

    std::vector<Rat> out(na + nb - 1);
    for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
    for (std::size_t i = 0; i < z1.size(); ++i)
        if (i + h < out.size()) out[i + h] += z1[i];
    for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] += z2[i];
    return out;
}

}  // namespace

TruncSeries::TruncSeries(std::size_t order, std::vector<Rat> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order_ + 1)
        throw order_mismatch("TruncSeries: need exactly order+1 coefficients");
}

TruncSeries TruncSeries::one(std::size_t order) { return constant(order, rat(1)); }

TruncSeries TruncSeries::constant(std::size_t order, const Rat& c) {
    TruncSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

const Rat& TruncSeries::operator[](std::size_t n) const {
    if (n > order_) throw order_mismatch("TruncSeries: index above truncation order");
    return coeffs_[n];
}

void TruncSeries::set(std::size_t n, const Rat& value) {
    if (n > order_) throw order_mismatch("TruncSeries: index above truncation order");
    coeffs_[n] = value;
}

void TruncSeries::check_same_order(const TruncSeries& rhs) const {
    if (order_ != rhs.order_)
        throw order_mismatch("TruncSeries: mixed truncation orders");
}

TruncSeries TruncSeries::operator+(const TruncSeries& rhs) const {
    check_same_order(rhs);
    TruncSeries out(order_);
    for (std::size_t i = 0; i <= order_; ++i) out.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
    return out;
}

TruncSeries TruncSeries::operator-(const TruncSeries& rhs) const {
    check_same_order(rhs);
    TruncSeries out(order_);
    for (std::size_t i = 0; i <= order_; ++i) out.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
    return out;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries out(order_);
    for (std::size_t i = 0; i <= order_; ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
}

TruncSeries TruncSeries::mul_schoolbook(const TruncSeries& rhs) const {
    check_same_order(rhs);
    TruncSeries out(order_);
    const std::size_t n = order_ + 1;
    auto body = [&](std::size_t lo, std::size_t hi) {
        Rat term;
        for (std::size_t k = lo; k < hi; ++k) {
            Rat acc;
            for (std::size_t i = 0; i <= k; ++i) {
                if (coeffs_[i] == 0 || rhs.coeffs_[k - i] == 0) continue;
                term = coeffs_[i] * rhs.coeffs_[k - i];
                acc += term;
            }
            out.coeffs_[k] = std::move(acc);
        }
    };
    if (n >= kParallelThreshold)
        parallel_for(n, body, 128);
    else
        body(0, n);
    return out;
}

TruncSeries TruncSeries::mul_divide_conquer(const TruncSeries& rhs) const {
    check_same_order(rhs);
    auto full = full_mul_karatsuba(coeffs_.data(), coeffs_.size(), rhs.coeffs_.data(),
                                   rhs.coeffs_.size());
    full.resize(order_ + 1);
    return TruncSeries(order_, std::move(full));
}

TruncSeries TruncSeries::operator*(const TruncSeries& rhs) const {
    check_same_order(rhs);
    if (order_ + 1 >= 2 * kDivideConquerThreshold) return mul_divide_conquer(rhs);
    return mul_schoolbook(rhs);
}

TruncSeries TruncSeries::invert() const {
    if (coeffs_[0] == 0) throw non_invertible("TruncSeries: zero constant term");
    TruncSeries out(order_);
    const Rat inv0 = rat(1) / coeffs_[0];
    out.coeffs_[0] = inv0;
    for (std::size_t n = 1; n <= order_; ++n) {
        Rat acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (coeffs_[k] == 0) continue;
            acc += coeffs_[k] * out.coeffs_[n - k];
        }
        out.coeffs_[n] = -inv0 * acc;
    }
    return out;
}

TruncSeries TruncSeries::pow(unsigned e) const {
    TruncSeries acc = one(order_);
    TruncSeries base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

TruncSeries TruncSeries::scaled(const Rat& c) const {
    TruncSeries out(order_);
    for (std::size_t i = 0; i <= order_; ++i) out.coeffs_[i] = coeffs_[i] * c;
    return out;
}

long long pentagonal(long long j) { return (3 * j * j + j) / 2; }

long long triangular(long long k) { return (k * k + k) / 2; }

TruncSeries euler_product(std::size_t N) {
    TruncSeries s(N);
    s.set(0, rat(1));
    for (long long j = 1;; ++j) {
        const long long w_pos = pentagonal(j);
        const long long w_neg = pentagonal(-j);
        if (w_neg > static_cast<long long>(N) && w_pos > static_cast<long long>(N)) break;
        const Rat sign = rat((j % 2 == 0) ? 1 : -1);
        if (w_pos <= static_cast<long long>(N)) s.set(w_pos, sign);
        if (w_neg <= static_cast<long long>(N)) s.set(w_neg, sign);
    }
    return s;
}

TruncSeries triple_product(std::size_t N) {
    TruncSeries s(N);
    for (long long k = 0; triangular(k) <= static_cast<long long>(N); ++k) {
        const long long c = (k % 2 == 0) ? (2 * k + 1) : -(2 * k + 1);
        s.set(triangular(k), rat(c));
    }
    return s;
}

}  // namespace partrec
