#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "partrec/rational.hpp"
#include "partrec/trunc_series.hpp"

namespace partrec {

enum class PartitionKind { ordinary, colored, regular };

/// Table of partition counts p(0..N) for one of the three families, computed
/// from the generating function (the oracle side of every recurrence check).
class PartitionTable {
public:
    /// t-colored partitions: coefficients of 1/(q;q)_inf^t.
    static PartitionTable colored(unsigned t, std::size_t N);
    /// t-regular partitions: coefficients of (q^t;q^t)_inf / (q;q)_inf.
    static PartitionTable regular(unsigned t, std::size_t N);
    /// ordinary p(n) (same as colored with t = 1).
    static PartitionTable ordinary(std::size_t N);

    PartitionKind kind() const { return kind_; }
    unsigned t() const { return t_; }
    std::size_t max_n() const { return values_.size() - 1; }

    /// Negative indices read as 0, so recurrence sums need no bounds fuss.
    const Int& at(long long n) const;
    const std::vector<Int>& values() const { return values_; }

    /// First max_n+1 coefficients as a Rat series (for series-identity checks).
    TruncSeries to_series() const;

    PartitionTable(PartitionKind kind, unsigned t, std::vector<Int> values);

private:
    PartitionKind kind_;
    unsigned t_;
    std::vector<Int> values_;
    static const Int zero_;
};

/// Euler's pentagonal recurrence: sum_{j != 0} (-1)^{j-1} p(n - w_j).
Int euler_recurrence(std::size_t n, const PartitionTable& table);

/// 2-colored recurrence: sum_{k>=1} (-1)^{k+1} (2k+1) p2(n - T_k),
/// plus (-1)^j when n = w_j.
Int p2_recurrence(std::size_t n, const PartitionTable& table);

/// 3-colored base recurrence (v = 0): sum_{k>=1} (-1)^{k+1} (2k+1) p3(n - T_k).
Int p3_recurrence_v0(std::size_t n, const PartitionTable& table);

/// t-regular recurrence: sum_{k != 0} (-1)^{k+1} p_t(n - w_k),
/// plus (-1)^j when n = t * w_j.
Int pt_regular_recurrence(unsigned t, std::size_t n, const PartitionTable& table);

/// Witnesses for the case splits. n = 1 is both pentagonal (j = -1) and
/// triangular (k = 1), so the two are reported independently.
struct Classification {
    std::optional<long long> pentagonal_j;
    std::optional<long long> triangular_k;
};
Classification classify(long long n);

/// The unique j with n = t * w_j, when it exists.
std::optional<long long> t_pentagonal_witness(long long n, unsigned t);

}  // namespace partrec
