#pragma once

#include <stdexcept>
#include <string>

namespace partrec {

/// Combining series of different truncation orders, or reading past one.
struct order_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Series inversion attempted on a series with zero constant term.
struct non_invertible : std::domain_error {
    using std::domain_error::domain_error;
};

/// A table or coefficient array is too short for the requested computation.
struct truncation_error : std::length_error {
    using std::length_error::length_error;
};

/// Requested tolerance cannot be met at the given truncation parameters.
struct precision_infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace partrec
