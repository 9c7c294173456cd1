#include "decolab/zassenhaus.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "decolab/linalg.hpp"

namespace decolab {
namespace {

constexpr double kExactFloor = 1e-14;

void require_square_pair(const MatrixX& a, const MatrixX& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "need two square matrices of equal size");
  }
}

OrderCheckResult run_halvings(int order, double t0, int halvings,
                              const std::function<double(double)>& error_at) {
  OrderCheckResult result{order, {}, {}, 0.0};
  for (int i = 0; i <= halvings; ++i) {
    const double t = std::ldexp(t0, -i);
    result.t_values.push_back(t);
    result.errors.push_back(error_at(t));
  }
  if (std::all_of(result.errors.begin(), result.errors.end(),
                  [](double e) { return e < kExactFloor; })) {
    throw Error(ErrorCode::kDegenerateCase, "splitting is exact; slope undefined");
  }
  result.fitted_slope = log_log_slope(result.t_values, result.errors);
  return result;
}

void require_harness(const MatrixX& a, const MatrixX& b, double t0, int halvings) {
  require_square_pair(a, b);
  if (halvings < 3) {
    throw Error(ErrorCode::kInvalidArgument, "order check needs at least 3 halvings");
  }
  if (!(t0 > 0.0) || t0 * inf_norm(a + b) > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "need t0 > 0 with ||t0 (A + B)|| <= 1");
  }
}

}  // namespace

MatrixX commutator(const MatrixX& a, const MatrixX& b) {
  require_square_pair(a, b);
  return a * b - b * a;
}

MatrixX zassenhaus_product(double t, const MatrixX& a, const MatrixX& b, int order) {
  require_square_pair(a, b);
  if (order < 1 || order > 3) {
    throw Error(ErrorCode::kInvalidArgument, "Zassenhaus order must be 1, 2 or 3");
  }
  MatrixX product = expm(MatrixX(t * b)) * expm(MatrixX(t * a));
  if (order == 1) return product;
  const MatrixX ab = commutator(a, b);
  product = expm(MatrixX(0.5 * t * t * ab)) * product;
  if (order == 2) return product;
  const MatrixX third = 2.0 * commutator(ab, b) + commutator(ab, a);
  return expm(MatrixX(-(t * t * t / 6.0) * third)) * product;
}

bool OrderCheckResult::slope_within(double window) const {
  return std::abs(fitted_slope - expected_slope()) <= window;
}

OrderCheckResult order_check(const MatrixX& a, const MatrixX& b, int order, double t0,
                             int halvings) {
  if (order != 2 && order != 3) {
    throw Error(ErrorCode::kInvalidArgument, "order check supports orders 2 and 3");
  }
  require_harness(a, b, t0, halvings);
  const MatrixX sum = a + b;
  return run_halvings(order, t0, halvings, [&](double t) {
    return inf_norm(zassenhaus_product(t, a, b, order) - expm(MatrixX(t * sum)));
  });
}

OrderCheckResult bch_order_check(const MatrixX& a, const MatrixX& b, double t0, int halvings) {
  require_harness(a, b, t0, halvings);
  const MatrixX ab = commutator(a, b);
  return run_halvings(2, t0, halvings, [&](double t) {
    const MatrixX lhs = expm(MatrixX(t * a)) * expm(MatrixX(t * b));
    const MatrixX rhs = expm(MatrixX(t * a + t * b + 0.5 * t * t * ab));
    return inf_norm(lhs - rhs);
  });
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "slope fit needs two or more paired points");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace decolab
