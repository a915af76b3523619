#include <doctest.h>

#include "partrec/analytic.hpp"
#include "partrec/errors.hpp"
#include "partrec/fixtures.hpp"
#include "partrec/rankin_cohen.hpp"

using namespace partrec;

namespace {

RealHP tol_digits(long d, long prec) {
    return RealHP(Rat(1), prec) / RealHP(pow_int(Int(10), static_cast<unsigned long>(d)), prec);
}

}  // namespace

TEST_CASE("hypergeometric basics") {
    const long prec = 40;
    CHECK(abs(hyp2f1(rat(1, 2), rat(3), rat(7, 2), RealHP(0L, prec), prec) -
              RealHP(1L, prec)) < tol_digits(38, prec));

    // 1F1(a;a;z) = e^z
    RealHP half(Rat(1, 2), prec);
    RealHP lhs = hyp1f1(rat(3, 2), rat(3, 2), half, prec);
    CHECK(abs(lhs - exp(half)) < tol_digits(38, prec));

    CHECK_THROWS_AS(hyp1f1(rat(1), rat(-2), half, prec), std::invalid_argument);
    CHECK_THROWS_AS(hyp2f1(rat(1), rat(1), rat(1), RealHP(2L, prec), prec), std::domain_error);
}

TEST_CASE("euler-transformed evaluation of the gauss function") {
    // 2F1(1, 3/2+2v-r; 7/2-r; 1/n^2) against the finite transformed sum
    // (1-1/n^2)^{1-2v} sum_i (-1)^i n^{-2i} C(2v-2,i) (5/2-r)^{(i)}/(7/2-r)^{(i)}
    const long prec = 45;
    const unsigned v = 2;
    const unsigned r = 1;
    const long n = 3;
    RealHP direct = hyp2f1(rat(1), rat(3, 2) + rat(2L * v) - rat((long)r),
                           rat(7, 2) - rat((long)r), RealHP(rat(1, n * n), prec), prec);
    RealHP transformed(0L, prec);
    for (unsigned i = 0; i <= 2 * v - 2; ++i) {
        Rat term = rat(binomial(2 * v - 2, i)) * rising_half(5 - 2L * r, i) /
                   rising_half(7 - 2L * r, i) / pow_rat(rat(n * n), i);
        if (i % 2 == 1) term = -term;
        transformed += RealHP(term, prec);
    }
    transformed *= RealHP(rat(1) - rat(1, n * n), prec).pow_int(1 - 2L * (long)v);
    CHECK(abs(direct - transformed) < tol_digits(40, prec));

    // (v,r) = (1,0) collapses to a geometric series: 2F1(1,7/2;7/2;1/9) = 9/8
    RealHP geo = hyp2f1(rat(1), rat(7, 2), rat(7, 2), RealHP(rat(1, 9), prec), prec);
    CHECK(abs(geo - RealHP(rat(9, 8), prec)) < tol_digits(40, prec));
}

TEST_CASE("whittaker function") {
    const long prec = 40;
    RealHP z = RealHP::pi(prec) * RealHP(Rat(1, 2), prec);
    RealHP m = whittaker_m(rat(3, 4), rat(5, 4), z, prec);
    CHECK(m.sign() > 0);
    CHECK(m.is_finite());

    // small-z leading term M ~ z^{mu+1/2}
    RealHP zs(rat(1, 1000000), prec);
    RealHP lead = zs.pow_rat(rat(5, 4) + rat(1, 2));
    RealHP ratio = whittaker_m(rat(3, 4), rat(5, 4), zs, prec) / lead;
    CHECK(abs(ratio - RealHP(1L, prec)) < tol_digits(5, prec));

    CHECK_THROWS_AS(whittaker_m(rat(1), rat(-1), z, prec), std::invalid_argument);
    CHECK_THROWS_AS(whittaker_m(rat(3, 4), rat(5, 4), RealHP(-1L, prec), prec),
                    std::domain_error);
}

TEST_CASE("whittaker derivative consistency under numerical differentiation") {
    // central difference of M against the analytic derivative through the
    // Kummer form: M' = e^{-z/2} z^{mu+1/2} (-F/2 + (mu+1/2) F / z + (a/b) F(a+1;b+1))
    const long prec = 40;
    const Rat lambda(3, 4), mu(5, 4);
    const Rat a = mu - lambda + rat(1, 2);
    const Rat b = rat(1) + rat(2) * mu;
    RealHP z(Rat(13, 10), prec);
    RealHP h(Rat(1), prec);
    h = tol_digits(12, prec);
    RealHP num = (whittaker_m(lambda, mu, z + h, prec) - whittaker_m(lambda, mu, z - h, prec)) /
                 (RealHP(2L, prec) * h);
    RealHP F = hyp1f1(a, b, z, prec);
    RealHP Fp = RealHP(a / b, prec) * hyp1f1(a + rat(1), b + rat(1), z, prec);
    RealHP analytic = exp(-z * RealHP(Rat(1, 2), prec)) * z.pow_rat(mu + rat(1, 2)) *
                      (F * (RealHP(mu + rat(1, 2), prec) / z - RealHP(Rat(1, 2), prec)) + Fp);
    CHECK(abs(num - analytic) < abs(analytic) * tol_digits(prec / 2, prec));
}

TEST_CASE("laplace integral: quadrature vs closed form") {
    const long prec = 45;
    for (auto [r, n, v] : {std::tuple<unsigned, unsigned long long, unsigned>{0, 3, 6},
                           {2, 3, 2},
                           {2, 3, 6},
                           {1, 9, 4}}) {
        RealHP q = integral_I_quadrature(r, n, v, prec);
        RealHP c = integral_I_closed(r, n, v, prec);
        CHECK(abs(q - c) < abs(c) * tol_digits(prec - 5, prec));
    }
    CHECK_THROWS_AS(integral_I_quadrature(0, 1, 2, 30), std::domain_error);
    CHECK_THROWS_AS(integral_I_closed(0, 1, 2, 30), std::domain_error);
}

TEST_CASE("laplace integral power-law scaling") {
    const long prec = 40;
    const unsigned v = 2, r = 0;
    RealHP i5 = integral_I_closed(r, 5, v, prec);
    RealHP i10 = integral_I_closed(r, 10, v, prec);
    const long e = 4L * v - 2 * r + 3;
    // after dividing out the hypergeometric corrections the ratio is 2^e exactly
    RealHP f5 = hyp2f1(rat(1), rat(3, 2) + rat(2L * v), rat(7, 2),
                       RealHP(rat(1, 25), prec), prec);
    RealHP f10 = hyp2f1(rat(1), rat(3, 2) + rat(2L * v), rat(7, 2),
                        RealHP(rat(1, 100), prec), prec);
    RealHP pure = (i5 / i10) * (f10 / f5);
    CHECK(abs(pure - RealHP(2L, prec).pow_int(e)) <
          RealHP(2L, prec).pow_int(e) * tol_digits(35, prec));
    // raw ratio is within ~5% of the pure power at these n
    CHECK(abs((i5 / i10) / RealHP(2L, prec).pow_int(e) - RealHP(1L, prec)) <
          RealHP(Rat(1, 10), prec));
}

TEST_CASE("omega dual paths") {
    const long prec = 45;
    for (auto [v, n] : {std::pair<unsigned, unsigned long long>{2, 3}, {6, 5}, {4, 9}}) {
        RealHP a = omega_path_a(v, n, prec);
        RealHP b = omega_path_b(v, n, prec);
        CHECK(abs(a - b) < abs(a) * tol_digits(prec - 8, prec));
    }
    CHECK_THROWS_AS(omega_path_a(1, 3, 30), std::domain_error);
    CHECK_THROWS_AS(omega_path_b(2, 4, 30), std::domain_error);
}

TEST_CASE("omega tends to its leading term") {
    const long prec = 40;
    const unsigned v = 3;
    const unsigned long long n = 1000001;  // odd
    RealHP w = omega_path_b(v, n, prec);
    // i = 0, m = 0 term of the double sum
    const Rat pref =
        gamma_half_coeff(2L * v - 3) * gamma_half_coeff(2L * v + 3) / gamma_half_coeff(-3);
    const Rat lead = pref * rising_int(static_cast<long>(v) - 1, v) / rising_half(-3, v);
    RealHP limit = RealHP(lead, prec) * sqrt(RealHP::pi(prec));
    CHECK(abs(w / limit - RealHP(1L, prec)) < tol_digits(9, prec));
}

TEST_CASE("etilde exact values") {
    PiRat e200 = etilde(2, 0, 0);
    CHECK(e200.r == rat(1, 4));
    CHECK(e200.pi_power == -3);

    PiRat e600 = etilde(6, 0, 0);
    CHECK(e600.r == rat(42567525, 64));
    CHECK(e600.pi_power == -11);
    CHECK(etilde(6, 1, 0).r == rat(42567525, 16));
    CHECK(etilde(6, 0, 1).r == rat(468242775, 64));

    // the half-integer rising factorial in the denominator can never vanish
    for (unsigned v = 2; v <= 20; ++v)
        for (unsigned j = 0; j + 2 <= v; ++j) CHECK(rising_half(-3 - 2L * j, v) != 0);

    // signs recorded from direct evaluation: all positive at m = 0 for v = 6
    for (unsigned j = 0; j <= 4; ++j) CHECK(etilde(6, j, 0).r > 0);
    // adjacent-j sign products agree with the directly evaluated signs
    for (unsigned j = 0; j + 1 <= 4; ++j) {
        const int sj = sgn(etilde(6, j, 2).r);
        const int sj1 = sgn(etilde(6, j + 1, 2).r);
        CHECK(sgn(etilde(6, j, 2).r * etilde(6, j + 1, 2).r) == sj * sj1);
    }

    CHECK_THROWS_AS(etilde(1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(etilde(6, 5, 0), std::invalid_argument);
}

TEST_CASE("dirichlet partial sums") {
    const long prec = 40;
    auto delta = cusp_eigenform_1dim(12, 200);
    const auto& f = delta.forms[0];

    CHECK(dirichlet_partial(f, 1, 14, prec).sign() == 0);
    CHECK(dirichlet_partial(f, 2, 14, prec).sign() == 0);

    // single surviving term at N=3: (-4|3) tau(1) 3^{-14}
    RealHP d3 = dirichlet_partial(f, 3, 14, prec);
    RealHP expect = -RealHP(rat(1, 4782969), prec);
    CHECK(abs(d3 - expect) < tol_digits(38, prec));

    // even n are killed by the character: extending N from 3 to 4 adds nothing
    RealHP d4 = dirichlet_partial(f, 4, 14, prec);
    CHECK(abs(d4 - d3).sign() == 0);

    // non-integer real exponent: D(f;3, 29/2) = -3^{-29/2}
    RealHP dh = dirichlet_partial(f, 3, rat(29, 2), prec);
    RealHP eh = -RealHP(rat(1, 3), prec).pow_rat(rat(29, 2));
    CHECK(abs(dh - eh) < abs(eh) * tol_digits(35, prec));

    auto small = cusp_eigenform_1dim(12, 10);
    CHECK_THROWS_AS(dirichlet_partial(small.forms[0], 101, 14, prec), truncation_error);
}

TEST_CASE("petersson norm") {
    const long prec = 40;
    auto delta = cusp_eigenform_1dim(12, 400);
    const auto& f = delta.forms[0];
    auto norm = petersson_norm(f, 12, prec);
    CHECK(norm.value.sign() > 0);

    // independently computed reference (two quadrature stacks agree)
    RealHP ref = RealHP::from_string("1.03536205680432092234781681222516459322e-6", prec);
    CHECK(abs(norm.value - ref) < ref * tol_digits(28, prec));

    // stability under doubling the truncations
    auto norm2 = petersson_norm(f, 12, prec, 2 * ((prec + 12) * 2.302585 / (4 * 3.14159) + 8),
                                140);
    CHECK(abs(norm.value - norm2.value) < ref * tol_digits(12, prec));

    CHECK_THROWS_AS(petersson_norm(cusp_eigenform_1dim(12, 10).forms[0], 12, prec),
                    truncation_error);
}

TEST_CASE("weighted sum reproduces the reference value") {
    TruncationParams params;  // M=100, N=700, prec=60
    auto delta = cusp_eigenform_1dim(12, (699ULL * 699 - 1) / 8);
    auto ws = weighted_sum_Df(6, delta.forms[0], params);
    RealHP ref = RealHP::from_string(std::string(fixtures::kDeltaWeightedSum), params.prec);
    RealHP tol(Rat(fixtures::kDeltaWeightedSumTol), params.prec);
    CHECK(abs(ws.value - ref) < tol);

    RealHP beta6(beta(6), params.prec);
    CHECK(abs(ws.value - beta6) < tol);
    CHECK(ws.tail_bound.sign() > 0);
}

TEST_CASE("weighted sum truncation behavior") {
    const long prec = 45;
    auto delta = cusp_eigenform_1dim(12, (701ULL * 701 - 1) / 8);
    const auto& f = delta.forms[0];
    const auto norm = petersson_norm(f, 12, prec);

    // doubling the m-cutoff moves the value by less than the reported tail
    auto ws20 = weighted_sum_Df(6, f, norm.value, TruncationParams{20, 301, prec});
    auto ws40 = weighted_sum_Df(6, f, norm.value, TruncationParams{40, 301, prec});
    CHECK(abs(ws40.value - ws20.value) < ws20.tail_bound);

    // extending the Dirichlet cutoff converges toward the exact constant
    RealHP beta6(beta(6), prec);
    auto ws301 = weighted_sum_Df(6, f, norm.value, TruncationParams{100, 301, prec});
    auto ws701 = weighted_sum_Df(6, f, norm.value, TruncationParams{100, 701, prec});
    CHECK(abs(ws301.value - beta6) < ws301.tail_bound);
    CHECK(abs(ws701.value - beta6) < ws701.tail_bound);
    CHECK(abs(ws701.value - beta6) < abs(ws301.value - beta6));
}

TEST_CASE("weighted sum approaches beta at the next one-dimensional weight") {
    TruncationParams params{100, 301, 50};
    auto d16 = cusp_eigenform_1dim(16, (301ULL * 301 - 1) / 8);
    auto ws = weighted_sum_Df(8, d16.forms[0], params);
    RealHP beta8(beta(8), params.prec);
    RealHP diff = abs(ws.value - beta8);
    CHECK(diff < ws.tail_bound);
    CHECK(diff < RealHP(Rat(1, 10000), params.prec));
}

TEST_CASE("hecke trace in dimension one ties to the weighted sum") {
    TruncationParams params{20, 101, 40};
    auto tr1 = hecke_trace(6, 1, params);
    auto tr2 = hecke_trace(6, 2, params);
    // Tr(n) = D_Delta tau(n), so Tr(2)/Tr(1) = tau(2) = -24
    RealHP ratio = tr2.value / tr1.value;
    CHECK(abs(ratio - RealHP(-24L, params.prec)) < tol_digits(20, params.prec));
    CHECK_THROWS_AS(hecke_trace(7, 1, params), std::invalid_argument);
}

TEST_CASE("hecke trace sums both forms in dimension two") {
    TruncationParams params{30, 151, 40};
    // a_f(1) = 1 for both eigenforms, so Tr(1) is the plain sum of the
    // two weighted sums; conjugate contributions combine to a real value
    auto tr1 = hecke_trace(12, 1, params);
    const unsigned long long max_odd = 151;
    const std::size_t order = (max_odd * max_odd - 1) / 8;
    auto table = eigenforms_numeric(24, order, params.prec);
    RealHP expect(0L, params.prec);
    for (const auto& f : table.forms) expect += weighted_sum_Df(12, f, params).value;
    CHECK(abs(tr1.value - expect) < abs(expect) * tol_digits(25, params.prec));
    CHECK(tr1.value.is_finite());
    CHECK(tr1.tail_bound.sign() > 0);
}

TEST_CASE("theorem-3 style residual check at small truncation") {
    TruncationParams params{20, 101, 40};
    auto p3 = PartitionTable::colored(3, 16);
    auto rep = verify_theorem3(6, 16, params, p3);
    CHECK(rep.below_envelope);
    CHECK(rep.status == "pass");
    CHECK(RealHP::from_string(rep.max_residual, 20) < RealHP(Rat(1, 10000), 20));

    TruncationParams bad{20, 101, 20};  // below the minimum working precision
    CHECK_THROWS_AS(verify_theorem3(6, 5, bad, p3), std::invalid_argument);
}
