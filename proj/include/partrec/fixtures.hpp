#pragma once

#include <array>
#include <string_view>

namespace partrec::fixtures {

/// Published reference values that the exact pipeline must reproduce
/// bit-for-bit. Everything the test suites and the `tables` command compare
/// against lives here, in one auditable place; nothing else in the library
/// hard-codes any of these.

struct AlphaEntry {
    unsigned v;
    std::string_view alpha;
};

struct AlphaBetaEntry {
    unsigned v;
    std::string_view alpha;
    std::string_view beta;
};

/// Weights with no cusp term: R_v = alpha_v E_2v.
inline constexpr std::array<AlphaEntry, 5> kAlphaOnly{{
    {2, "1/64"},
    {3, "1/128"},
    {4, "15/4096"},
    {5, "7/4096"},
    {7, "99/262144"},
}};

/// Weights with a one-dimensional cusp space: R_v = alpha_v E_2v + beta_v Delta_2v.
inline constexpr std::array<AlphaBetaEntry, 6> kAlphaBeta{{
    {6, "105/131072", "-51051/22112"},
    {8, "3003/16777216", "-9429849/1851904"},
    {9, "715/8388608", "-324385347/44919808"},
    {10, "21879/536870912", "-328502311137/22886612992"},
    {11, "20995/1073741824", "-318771027861/10182066176"},
    {13, "156009/34359738368", "-162957690002835/1379781312512"},
}};

/// The reference numeric value of the truncated weighted sum for the weight
/// 12 form at M=100, N=700 (it must also agree with beta_6 above to 1e-5).
inline constexpr std::string_view kDeltaWeightedSum = "-2.308746";
inline constexpr double kDeltaWeightedSumTol = 1e-5;

}  // namespace partrec::fixtures
