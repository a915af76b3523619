#include "partrec/partitions.hpp"

#include <cmath>
#include <stdexcept>

#include "partrec/errors.hpp"
#include "partrec/series_kernel.hpp"

namespace partrec {

const Int PartitionTable::zero_{0};

PartitionTable::PartitionTable(PartitionKind kind, unsigned t, std::vector<Int> values)
    : kind_(kind), t_(t), values_(std::move(values)) {
    if (values_.empty() || values_[0] != 1)
        throw std::invalid_argument("PartitionTable: values[0] must be 1");
}

PartitionTable PartitionTable::colored(unsigned t, std::size_t N) {
    if (t < 1) throw std::invalid_argument("colored partitions need t >= 1");
    std::vector<Int> v(N + 1);
    v[0] = 1;
    const auto euler = euler_sparse(N);
    for (unsigned i = 0; i < t; ++i) v = div_sparse(v, euler, N);
    return PartitionTable(t == 1 ? PartitionKind::ordinary : PartitionKind::colored, t,
                          std::move(v));
}

PartitionTable PartitionTable::regular(unsigned t, std::size_t N) {
    if (t < 2) throw std::invalid_argument("regular partitions need t >= 2");
    std::vector<Int> v(N + 1);
    v[0] = 1;
    v = div_sparse(v, euler_sparse(N), N);
    v = mul_sparse(v, euler_sparse(N, t), N);
    return PartitionTable(PartitionKind::regular, t, std::move(v));
}

PartitionTable PartitionTable::ordinary(std::size_t N) { return colored(1, N); }

const Int& PartitionTable::at(long long n) const {
    if (n < 0) return zero_;
    if (static_cast<std::size_t>(n) >= values_.size())
        throw truncation_error("PartitionTable: index beyond table length");
    return values_[static_cast<std::size_t>(n)];
}

TruncSeries PartitionTable::to_series() const {
    TruncSeries s(max_n());
    for (std::size_t i = 0; i < values_.size(); ++i) s.set(i, rat(values_[i]));
    return s;
}

namespace {

long long isqrt_ll(long long n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

void require_table(const PartitionTable& table, std::size_t n, PartitionKind kind, unsigned t) {
    if (table.kind() != kind || (t != 0 && table.t() != t))
        throw std::invalid_argument("recurrence: table holds the wrong partition family");
    if (n > 0 && table.max_n() < n - 1)
        throw truncation_error("recurrence: table too short");
}

}  // namespace

Classification classify(long long n) {
    Classification c;
    if (n < 0) return c;
    if (n == 0) {
        // w_0 = T_0 = 0; the recurrences only ever ask about n >= 1.
        c.pentagonal_j = 0;
        c.triangular_k = 0;
        return c;
    }
    // 24n+1 = (6j+1)^2 exactly when n is pentagonal
    const long long d24 = 24 * n + 1;
    const long long r24 = isqrt_ll(d24);
    if (r24 * r24 == d24) {
        long long j = 0;
        if (r24 % 6 == 1)
            j = (r24 - 1) / 6;
        else if (r24 % 6 == 5)
            j = -(r24 + 1) / 6;
        if (j != 0) {
            if (pentagonal(j) != n)
                throw std::logic_error("classify: pentagonal witness failed recheck");
            c.pentagonal_j = j;
        }
    }
    // 8n+1 = (2k+1)^2 exactly when n is triangular
    const long long d8 = 8 * n + 1;
    const long long r8 = isqrt_ll(d8);
    if (r8 * r8 == d8 && r8 % 2 == 1) {
        const long long k = (r8 - 1) / 2;
        if (triangular(k) != n)
            throw std::logic_error("classify: triangular witness failed recheck");
        c.triangular_k = k;
    }
    return c;
}

std::optional<long long> t_pentagonal_witness(long long n, unsigned t) {
    if (t == 0 || n < 0 || n % static_cast<long long>(t) != 0) return std::nullopt;
    return classify(n / static_cast<long long>(t)).pentagonal_j;
}

Int euler_recurrence(std::size_t n, const PartitionTable& table) {
    require_table(table, n, PartitionKind::ordinary, 1);
    Int acc;
    const long long nn = static_cast<long long>(n);
    for (long long j = 1; pentagonal(-j) <= nn; ++j) {
        const bool plus = (j % 2 == 1);
        for (const long long w : {pentagonal(j), pentagonal(-j)}) {
            if (w > nn) continue;
            if (plus)
                acc += table.at(nn - w);
            else
                acc -= table.at(nn - w);
        }
    }
    return acc;
}

namespace {

// Shared triangular-number sum of Theorem 1 and the v=0 identity:
// sum_{k>=1} (-1)^{k+1} (2k+1) p(n - T_k).
Int triangular_sum(long long n, const PartitionTable& table) {
    Int acc;
    for (long long k = 1; triangular(k) <= n; ++k) {
        const unsigned long c = static_cast<unsigned long>(2 * k + 1);
        const Int& p = table.at(n - triangular(k));
        if (k % 2 == 1)
            mpz_addmul_ui(acc.get_mpz_t(), p.get_mpz_t(), c);
        else
            mpz_submul_ui(acc.get_mpz_t(), p.get_mpz_t(), c);
    }
    return acc;
}

}  // namespace

Int p2_recurrence(std::size_t n, const PartitionTable& table) {
    if (n == 0) throw std::invalid_argument("p2_recurrence: n must be positive");
    require_table(table, n, PartitionKind::colored, 2);
    Int acc = triangular_sum(static_cast<long long>(n), table);
    if (const auto j = classify(static_cast<long long>(n)).pentagonal_j) {
        acc += (*j % 2 == 0) ? 1 : -1;
    }
    return acc;
}

Int p3_recurrence_v0(std::size_t n, const PartitionTable& table) {
    if (n == 0) throw std::invalid_argument("p3_recurrence_v0: n must be positive");
    require_table(table, n, PartitionKind::colored, 3);
    return triangular_sum(static_cast<long long>(n), table);
}

Int pt_regular_recurrence(unsigned t, std::size_t n, const PartitionTable& table) {
    if (t < 2) throw std::invalid_argument("pt_regular_recurrence: t must be >= 2");
    if (n == 0) throw std::invalid_argument("pt_regular_recurrence: n must be positive");
    require_table(table, n, PartitionKind::regular, t);
    Int acc;
    const long long nn = static_cast<long long>(n);
    for (long long k = 1; pentagonal(-k) <= nn; ++k) {
        const bool plus = (k % 2 == 1);  // (-1)^{k+1}, same sign for k and -k
        for (const long long w : {pentagonal(k), pentagonal(-k)}) {
            if (w > nn) continue;
            if (plus)
                acc += table.at(nn - w);
            else
                acc -= table.at(nn - w);
        }
    }
    if (const auto j = t_pentagonal_witness(nn, t)) {
        acc += (*j % 2 == 0) ? 1 : -1;
    }
    return acc;
}

}  // namespace partrec
