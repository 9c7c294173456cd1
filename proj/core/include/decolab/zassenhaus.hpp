#pragma once

#include <vector>

#include "decolab/types.hpp"

namespace decolab {

/// [A, B] = AB - BA. Throws kDimensionMismatch for non-square or unequal sizes.
MatrixX commutator(const MatrixX& a, const MatrixX& b);

/// Truncated Zassenhaus splitting of e^{t(A+B)}:
///   order 1: e^{tB} e^{tA}
///   order 2: e^{t^2/2 [A,B]} (order 1)
///   order 3: e^{-t^3/6 (2[[A,B],B] + [[A,B],A])} (order 2)
MatrixX zassenhaus_product(double t, const MatrixX& a, const MatrixX& b, int order);

struct OrderCheckResult {
  int order;
  std::vector<double> t_values;  // t0, t0/2, t0/4, ...
  std::vector<double> errors;    // infinity-norm errors at each t
  double fitted_slope;           // least-squares slope of log(error) vs log(t)

  double expected_slope() const { return order + 1.0; }
  bool slope_within(double window) const;
};

/// Halving experiment for zassenhaus_product(order) against e^{t(A+B)}.
/// Needs halvings >= 3 and ||t0 (A + B)||_inf <= 1. Throws kDegenerateCase when
/// every error is below 1e-14 (commuting inputs; the splitting is exact).
OrderCheckResult order_check(const MatrixX& a, const MatrixX& b, int order, double t0,
                             int halvings);

/// Same harness for e^{tA} e^{tB} against e^{tA + tB + t^2/2 [A,B]};
/// reported with order 2 (expected slope 3).
OrderCheckResult bch_order_check(const MatrixX& a, const MatrixX& b, double t0, int halvings);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace decolab
