// Acceptance suite: every release gate in one binary, one line per
// criterion. Exits nonzero if any gate fails. Expected runtime is a few
// minutes, dominated by the high-precision Dirichlet-side checks.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "partrec/analytic.hpp"
#include "partrec/fixtures.hpp"
#include "partrec/modular_forms.hpp"
#include "partrec/partitions.hpp"
#include "partrec/rankin_cohen.hpp"
#include "partrec/series_kernel.hpp"
#include "partrec/trunc_series.hpp"

using namespace partrec;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what) {
    std::printf("criterion %d: %s - %s\n", id, ok ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

RealHP tol_digits(long d, long prec) {
    return RealHP(Rat(1), prec) / RealHP(pow_int(Int(10), static_cast<unsigned long>(d)), prec);
}

// 1. exact reproduction of the constant tables
void criterion_tables() {
    bool ok = true;
    for (const auto& e : fixtures::kAlphaOnly) ok = ok && (alpha(e.v) == rat_from_string(e.alpha));
    for (const auto& e : fixtures::kAlphaBeta)
        ok = ok && (alpha(e.v) == rat_from_string(e.alpha)) &&
             (beta(e.v) == rat_from_string(e.beta));
    report(1, ok, "alpha_v and beta_v reproduce the reference tables bit-exactly");
}

// 2. exact decomposition identities to order 500 for every listed v
void criterion_theorem2() {
    const std::size_t N = 500;
    auto p3 = PartitionTable::colored(3, N);
    bool ok = true;
    std::string detail;
    for (unsigned v : {2u, 3u, 4u, 5u, 7u, 6u, 8u, 9u, 10u, 11u, 13u}) {
        auto rep = verify_theorem2(v, N, p3);
        if (!rep.ok) {
            ok = false;
            detail += " v=" + std::to_string(v) + " mismatch at n=" +
                      std::to_string(rep.first_mismatch.value_or(0));
        }
    }
    report(2, ok, "3-colored recurrences exact for n <= 500, all eleven weights" + detail);
}

// 3. pentagonal/triangular recurrences against the oracles to 10^4
void criterion_recurrences() {
    const std::size_t N = 10000;
    bool ok = true;

    auto p2 = PartitionTable::colored(2, N);
    for (std::size_t n = 1; n <= N && ok; ++n) ok = (p2_recurrence(n, p2) == p2.at((long long)n));
    bool ok2 = true;
    auto p3 = PartitionTable::colored(3, N);
    for (std::size_t n = 1; n <= N && ok2; ++n)
        ok2 = (p3_recurrence_v0(n, p3) == p3.at((long long)n));
    ok = ok && ok2;

    for (unsigned t = 2; t <= 12 && ok; ++t) {
        auto rt = PartitionTable::regular(t, N);
        for (std::size_t n = 1; n <= N && ok; ++n)
            ok = (pt_regular_recurrence(t, n, rt) == rt.at((long long)n));
    }
    report(3, ok, "2-colored, 3-colored and t-regular (t=2..12) recurrences exact to n=10000");
}

// 4. the numeric reproduction of the weighted Dirichlet sum
void criterion_example(const WeightedSum& ws, long prec) {
    RealHP ref = RealHP::from_string(std::string(fixtures::kDeltaWeightedSum), prec);
    RealHP tol(Rat(fixtures::kDeltaWeightedSumTol), prec);
    const bool hit_ref = abs(ws.value - ref) < tol;
    RealHP beta6(beta(6), prec);
    const bool hit_beta = abs(ws.value - beta6) < tol;
    report(4, hit_ref && hit_beta,
           "weighted sum at (M,N)=(100,700) equals " + std::string(fixtures::kDeltaWeightedSum) +
               " and beta_6 within 1e-5 (got " + ws.value.to_string(10) + ")");
}

// 5. trace-form residuals at weights 12, 16 (dim 1) and 24 (dim 2)
void criterion_theorem3() {
    bool ok = true;
    std::string detail;
    {
        TruncationParams params;  // (100, 700, 60)
        auto p3 = PartitionTable::colored(3, 100);
        auto rep6 = verify_theorem3(6, 100, params, p3);
        auto rep8 = verify_theorem3(8, 50, params, p3);
        const bool r6 = rep6.below_envelope &&
                        RealHP::from_string(rep6.max_residual, 20) < RealHP(Rat(1, 10000), 20);
        const bool r8 = rep8.below_envelope &&
                        RealHP::from_string(rep8.max_residual, 20) < RealHP(Rat(1, 10000), 20);
        ok = r6 && r8;
        detail = "v=6 resid " + rep6.max_residual + ", v=8 resid " + rep8.max_residual;
    }
    {
        TruncationParams params{100, 301, 60};  // first two-dimensional space
        auto p3 = PartitionTable::colored(3, 20);
        auto rep12 = verify_theorem3(12, 20, params, p3);
        ok = ok && rep12.below_envelope;
        detail += ", v=12 resid " + rep12.max_residual + " envelope " + rep12.tail_bound;
    }
    report(5, ok, "trace recurrence residuals below envelope and 1e-4 target (" + detail + ")");
}

// 6. the nonvanishing lemma as a sweep
void criterion_nonvanishing() {
    bool ok = true;
    try {
        auto rep = nonvanishing_sweep(20, 10000);
        ok = rep.all_nonzero;
    } catch (const std::exception&) {
        ok = false;
    }
    for (unsigned v = 0; v <= 20; ++v) ok = ok && (poly_P(v, Int(0)) == 3);
    report(6, ok, "E_v(n,0) nonzero for v<=20, n<=10^4 and P_v(0)=3 for v<=20");
}

// 7. dual-path property suites
void criterion_dual_paths() {
    bool ok_rv = true;
    {
        const std::size_t N = 200;
        auto p3 = PartitionTable::colored(3, N);
        for (unsigned v = 0; v <= 13 && ok_rv; ++v)
            ok_rv = (rv_series(v, N, p3).series == rv_series_direct(v, N).series);
    }

    bool ok_int = true;
    const long prec = 50;
    for (unsigned v = 2; v <= 6 && ok_int; ++v)
        for (unsigned r = 0; r <= v && ok_int; ++r)
            for (unsigned long long n : {3ULL, 5ULL, 9ULL}) {
                RealHP q = integral_I_quadrature(r, n, v, prec);
                RealHP c = integral_I_closed(r, n, v, prec);
                if (!(abs(q - c) < abs(c) * tol_digits(prec - 5, prec))) {
                    ok_int = false;
                    break;
                }
            }

    bool ok_omega = true;
    for (auto [v, n] :
         {std::pair<unsigned, unsigned long long>{2, 3}, {3, 5}, {6, 5}, {8, 3}}) {
        RealHP a = omega_path_a(v, n, prec);
        RealHP b = omega_path_b(v, n, prec);
        if (!(abs(a - b) < abs(a) * tol_digits(prec - 8, prec))) ok_omega = false;
    }

    TruncSeries e = euler_product(200);
    const bool ok_triple = (triple_product(200) == e * e * e);

    report(7,
           ok_rv && ok_int && ok_omega && ok_triple,
           "dual-path suites: bracket routes exact (v<=13, N=200), quadrature vs closed form, "
           "omega paths, triple product vs cubed euler product");
}

// 8. scope statement: the infinite trace identity is checked through
// truncation-aware residuals, never as an exact desk result
void criterion_scope(const WeightedSum& ws) {
    const bool bounds_present = ws.tail_bound.sign() > 0;
    report(8, bounds_present,
           "general-v trace identity accepted via the property suites of criteria 5 and 7; "
           "all numeric reports carry explicit tail bounds (example bound: " +
               ws.tail_bound.to_string(4) + ")");
}

}  // namespace

int main() {
    try {
        criterion_tables();
        criterion_theorem2();
        criterion_recurrences();

        TruncationParams params;  // M=100, N=700, prec=60
        auto delta = cusp_eigenform_1dim(12, (699ULL * 699 - 1) / 8);
        auto ws = weighted_sum_Df(6, delta.forms[0], params);
        criterion_example(ws, params.prec);
        criterion_theorem3();
        criterion_nonvanishing();
        criterion_dual_paths();
        criterion_scope(ws);
    } catch (const std::exception& e) {
        std::printf("acceptance suite aborted: %s\n", e.what());
        return 1;
    }
    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
