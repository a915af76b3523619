#include <doctest.h>

#include <cstdint>

#include "partrec/errors.hpp"
#include "partrec/json_io.hpp"
#include "partrec/series_kernel.hpp"
#include "partrec/trunc_series.hpp"

using namespace partrec;

namespace {

// deterministic pseudo-random rationals for property tests
struct Lcg {
    std::uint64_t s;
    explicit Lcg(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 17;
    }
    Rat next_rat() {
        const long num = static_cast<long>(next() % 41) - 20;
        const long den = static_cast<long>(next() % 7) + 1;
        return rat(num, den);
    }
};

TruncSeries random_series(std::size_t order, Lcg& rng) {
    TruncSeries s(order);
    for (std::size_t i = 0; i <= order; ++i) s.set(i, rng.next_rat());
    return s;
}

// term-by-term finite product prod_{n=1..N} (1 - q^n), the direct oracle
// for the pentagonal closed form
TruncSeries euler_product_by_product(std::size_t N) {
    TruncSeries acc = TruncSeries::one(N);
    for (std::size_t n = 1; n <= N; ++n) {
        TruncSeries factor = TruncSeries::one(N);
        factor.set(n, rat(-1));
        acc = acc * factor;
    }
    return acc;
}

}  // namespace

TEST_CASE("pentagonal and triangular numbers") {
    CHECK(pentagonal(0) == 0);
    CHECK(pentagonal(1) == 2);
    CHECK(pentagonal(-1) == 1);
    CHECK(pentagonal(2) == 7);
    CHECK(pentagonal(-2) == 5);
    CHECK(triangular(0) == 0);
    CHECK(triangular(1) == 1);
    CHECK(triangular(2) == 3);
    CHECK(triangular(3) == 6);
}

TEST_CASE("mul basics") {
    TruncSeries a(3), b(3);
    a.set(0, rat(1));
    a.set(1, rat(1));  // 1+q
    b.set(0, rat(1));
    b.set(1, rat(-1));  // 1-q
    TruncSeries p = a * b;
    CHECK(p[0] == rat(1));
    CHECK(p[1] == rat(0));
    CHECK(p[2] == rat(-1));
    CHECK(p[3] == rat(0));

    Lcg rng(7);
    TruncSeries r = random_series(12, rng);
    CHECK(r * TruncSeries::one(12) == r);
}

TEST_CASE("mul rejects mixed orders") {
    TruncSeries a(3), b(4);
    CHECK_THROWS_AS(a * b, order_mismatch);
    CHECK_THROWS_AS(a + b, order_mismatch);
}

TEST_CASE("invert") {
    TruncSeries g(4);
    g.set(0, rat(1));
    g.set(1, rat(-1));
    TruncSeries inv = g.invert();  // geometric series
    for (std::size_t i = 0; i <= 4; ++i) CHECK(inv[i] == rat(1));

    CHECK(TruncSeries::constant(5, rat(2)).invert()[0] == rat(1, 2));

    TruncSeries zero(3);
    CHECK_THROWS_AS(zero.invert(), non_invertible);

    // p(5) = 7: brute-force count of partitions of 5 is frozen below in
    // test_partitions; here the series route must agree with the identity
    TruncSeries e = euler_product(50);
    CHECK(e.invert()[5] == rat(7));
    CHECK(e * e.invert() == TruncSeries::one(50));
}

TEST_CASE("euler product closed form vs direct product") {
    TruncSeries e = euler_product(7);
    CHECK(e[0] == rat(1));
    CHECK(e[1] == rat(-1));
    CHECK(e[2] == rat(-1));
    CHECK(e[3] == rat(0));
    CHECK(e[4] == rat(0));
    CHECK(e[5] == rat(1));
    CHECK(e[6] == rat(0));
    CHECK(e[7] == rat(1));
    CHECK(euler_product(200) == euler_product_by_product(200));
}

TEST_CASE("triple product closed form") {
    TruncSeries t = triple_product(6);
    CHECK(t[0] == rat(1));
    CHECK(t[1] == rat(-3));
    CHECK(t[3] == rat(5));
    CHECK(t[6] == rat(-7));
    CHECK(t[2] == rat(0));

    TruncSeries e = euler_product(200);
    CHECK(triple_product(200) == e * e * e);

    // coefficient of q^{(n^2-1)/8} is (-4|n) n for odd n
    TruncSeries t2 = triple_product(40);
    CHECK(t2[(3 * 3 - 1) / 8] == rat(-3));
    CHECK(t2[(5 * 5 - 1) / 8] == rat(5));
    CHECK(t2[(7 * 7 - 1) / 8] == rat(-7));
    CHECK(t2[(9 * 9 - 1) / 8] == rat(9));
    CHECK(t2[(11 * 11 - 1) / 8] == rat(-11));
}

TEST_CASE("ring properties on sampled series") {
    Lcg rng(99);
    for (int trial = 0; trial < 6; ++trial) {
        TruncSeries a = random_series(20, rng);
        TruncSeries b = random_series(20, rng);
        TruncSeries c = random_series(20, rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("schoolbook and divide-and-conquer multiply agree bit-exactly") {
    Lcg rng(1234);
    for (std::size_t order : {5, 63, 96, 97, 200, 257}) {
        TruncSeries a = random_series(order, rng);
        TruncSeries b = random_series(order, rng);
        CHECK(a.mul_schoolbook(b) == a.mul_divide_conquer(b));
    }
}

TEST_CASE("series json round trip") {
    Lcg rng(5);
    TruncSeries s = random_series(9, rng);
    auto j = series_to_json(s);
    CHECK(series_from_json(j) == s);
    CHECK(j.dump() == series_to_json(series_from_json(j)).dump());
}

TEST_CASE("integer kernel: sparse ops invert each other") {
    const std::size_t N = 300;
    auto euler = euler_sparse(N);
    std::vector<Int> one(N + 1);
    one[0] = 1;
    auto inv = div_sparse(one, euler, N);
    auto back = mul_sparse(inv, euler, N);
    CHECK(back[0] == 1);
    for (std::size_t i = 1; i <= N; ++i) CHECK(back[i] == 0);
}

TEST_CASE("integer kernel: kronecker multiply matches schoolbook") {
    Lcg rng(42);
    for (std::size_t N : {50, 129, 400}) {
        std::vector<Int> a(N + 1), b(N + 1);
        for (std::size_t i = 0; i <= N; ++i) {
            a[i] = Int(static_cast<long>(rng.next() % 2001) - 1000);
            b[i] = Int(static_cast<long>(rng.next() % 2001) - 1000);
            // mix in some large entries
            if (i % 17 == 0) a[i] *= pow_int(Int(10), 25);
            if (i % 13 == 0) b[i] *= -pow_int(Int(10), 30);
        }
        CHECK(mul_dense(a, b, N) == mul_dense_schoolbook(a, b, N));
    }
}
