#pragma once

#include <cstdint>
#include <span>

#include "rfcbf/dataset.hpp"

namespace rfcbf {

/// Empirical entropy in bits: -sum_i P(x_i) * log2(P(x_i)).
/// Zero-frequency categories contribute nothing. Throws on an empty column.
double entropy(const DiscreteColumn& x);

/// Empirical conditional entropy H(X|Y) in bits:
/// -sum_i P(y_i) sum_j P(x_j|y_i) * log2(P(x_j|y_i)).
/// Throws if the columns differ in length.
double conditional_entropy(const DiscreteColumn& x, const DiscreteColumn& y);

/// Information gain IG(X,Y) = H(X) - H(X|Y), with float-noise negatives
/// above -1e-12 clamped to zero.
double information_gain(const DiscreteColumn& x, const DiscreteColumn& y);

/// Symmetrical uncertainty SU(X,Y) = 2 * IG(X,Y) / (H(X) + H(Y)).
/// Defined as 0 when both columns are constant (zero denominator).
double symmetrical_uncertainty(const DiscreteColumn& x, const DiscreteColumn& y);

/// SU restricted to a row subset, without materializing sub-columns.
/// An empty subset means "all rows".
double symmetrical_uncertainty_on_rows(const DiscreteColumn& x,
                                       const DiscreteColumn& y,
                                       std::span<const std::uint32_t> rows);

}  // namespace rfcbf
