#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "partrec/partitions.hpp"
#include "partrec/rational.hpp"
#include "partrec/trunc_series.hpp"

namespace partrec {

/// E_v(n,k): the exact coefficient weight attached to p3(n - T_k) in the
/// bracket series R_v. All Gamma ratios reduce to rationals; no floating
/// point anywhere.
Rat calE(unsigned v, unsigned long long n, unsigned long long k);

/// P_v(x) = sum_{r=0}^{v} (-1)^r C(2v+1, 2r) (2r-3)(2r-1) x^r; integer
/// coefficients, constant term 3.
Int poly_P(unsigned v, const Int& x);

struct NonvanishingReport {
    unsigned v_max = 0;
    unsigned long long n_max = 0;
    bool all_nonzero = false;
    Rat min_abs;             // smallest |E_v(n,0)| seen
    unsigned argmin_v = 0;
    unsigned long long argmin_n = 0;
};

/// Checks E_v(n,0) != 0 for 0 <= v <= v_max, 1 <= n <= n_max. A zero would
/// contradict the nonvanishing lemma and throws.
NonvanishingReport nonvanishing_sweep(unsigned v_max, unsigned long long n_max);

struct RvSeries {
    unsigned v;
    TruncSeries series;
};

/// R_v as the explicit double sum: coefficient of q^n is
/// sum_{k >= 0, T_k <= n} (-1)^k E_v(n,k) p3(n - T_k).
RvSeries rv_series(unsigned v, std::size_t N, const PartitionTable& p3);

/// Independent route: applies the v-th Rankin-Cohen bracket with weights
/// (-3/2, 3/2) directly to the q^{±1/8}-shifted expansions, with the
/// differential operator acting as multiplication by the exact exponent.
RvSeries rv_series_direct(unsigned v, std::size_t N);

/// alpha_v = E_v(0,0).
Rat alpha(unsigned v);

/// beta_v = 4v E_v(0,0)/B_2v + 3 E_v(1,0) - E_v(1,1); defined for the
/// weights with one-dimensional cusp space, v in {6,8,9,10,11,13}.
Rat beta(unsigned v);

/// Whether the R_v decomposition needs the cusp term (dim S_2v = 1 side).
bool theorem2_has_cusp_term(unsigned v);
/// Whether v is covered by either branch of the decomposition theorem.
bool theorem2_supported(unsigned v);

struct Theorem2Report {
    unsigned v = 0;
    std::size_t N = 0;
    bool ok = false;
    std::optional<std::size_t> first_mismatch;
    Rat alpha;
    std::optional<Rat> beta;
};

/// Exact coefficient-wise verification of R_v = alpha_v E_2v (+ beta_v
/// Delta_2v) to order N; p3 must cover 0..N.
Theorem2Report verify_theorem2(unsigned v, std::size_t N, const PartitionTable& p3);

/// p3(n) recomputed from the explicit recurrence of the decomposition
/// theorem, reading p3(m) for m < n from the table (test/report helper).
Rat p3_from_theorem2(unsigned v, std::size_t n, const PartitionTable& p3);

}  // namespace partrec
