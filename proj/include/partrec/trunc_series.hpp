#pragma once

#include <cstddef>
#include <vector>

#include "partrec/rational.hpp"

namespace partrec {

/// Formal power series over Rat, truncated at a fixed order N.
///
/// Holds exactly N+1 coefficients (of q^0..q^N). The order is chosen at
/// construction and never changes; combining series of different orders
/// throws order_mismatch rather than truncating silently.
class TruncSeries {
public:
    explicit TruncSeries(std::size_t order) : order_(order), coeffs_(order + 1) {}
    TruncSeries(std::size_t order, std::vector<Rat> coeffs);

    static TruncSeries one(std::size_t order);
    static TruncSeries constant(std::size_t order, const Rat& c);

    std::size_t order() const { return order_; }
    const Rat& operator[](std::size_t n) const;
    void set(std::size_t n, const Rat& value);
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    TruncSeries operator+(const TruncSeries& rhs) const;
    TruncSeries operator-(const TruncSeries& rhs) const;
    TruncSeries operator-() const;
    TruncSeries operator*(const TruncSeries& rhs) const;

    /// Both multiplication paths must agree bit-exactly; operator* switches
    /// on a size threshold.
    TruncSeries mul_schoolbook(const TruncSeries& rhs) const;
    TruncSeries mul_divide_conquer(const TruncSeries& rhs) const;

    /// Multiplicative inverse mod q^{N+1}; requires a nonzero constant term.
    TruncSeries invert() const;

    TruncSeries pow(unsigned e) const;
    TruncSeries scaled(const Rat& c) const;

    bool operator==(const TruncSeries& rhs) const = default;

private:
    void check_same_order(const TruncSeries& rhs) const;

    std::size_t order_;
    std::vector<Rat> coeffs_;
};

/// (q;q)_inf to order N via the pentagonal number theorem:
/// coefficient of q^m is (-1)^k when m = k(3k+1)/2 for some integer k.
TruncSeries euler_product(std::size_t N);

/// (q;q)_inf^3 to order N via the Jacobi triple product:
/// coefficient of q^m is (-1)^k (2k+1) when m = k(k+1)/2.
TruncSeries triple_product(std::size_t N);

/// j-th pentagonal number (3j^2+j)/2, defined for all integers j.
long long pentagonal(long long j);

/// k-th triangular number k(k+1)/2.
long long triangular(long long k);

}  // namespace partrec
