#include "decolab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace decolab {
namespace {

constexpr double kCaseATol = 1e-12;
constexpr double kBisectWidth = 1e-6;
constexpr double kPolishResidual = 1e-13;
constexpr int kMaxPolish = 100;

// Roots of L^2 + p L + q with the larger real part (or positive imaginary
// part) first.
std::pair<Complex, Complex> quadratic_roots(double p, double q) {
  const double disc = p * p - 4.0 * q;
  if (disc >= 0.0) {
    const double root = std::sqrt(disc);
    // Avoid cancellation: compute the larger-magnitude root first.
    const double big = -0.5 * (p + std::copysign(root, p));
    const double small = big != 0.0 ? q / big : 0.0;
    return big >= small ? std::pair<Complex, Complex>{big, small}
                        : std::pair<Complex, Complex>{small, big};
  }
  const double im = 0.5 * std::sqrt(-disc);
  return {Complex(-0.5 * p, im), Complex(-0.5 * p, -im)};
}

Complex newton_polish(const CubicCoefficients& f, Complex z) {
  for (int i = 0; i < 3; ++i) {
    const Complex fz = f(z);
    const Complex dz = f.derivative(z);
    if (std::abs(dz) == 0.0) break;
    const Complex next = z - fz / dz;
    if (std::abs(f(next)) >= std::abs(fz)) break;
    z = next;
  }
  return z;
}

// Safeguarded real root on [lo, hi] with f(lo) <= 0 <= f(hi).
double isolate_root(const CubicCoefficients& f, double lo, double hi) {
  const double tol = kPolishResidual * f.scale();
  while (hi - lo > kBisectWidth * std::max(1.0, f.a2)) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    (fm < 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < kMaxPolish; ++i) {
    const double fx = f(x);
    if (std::abs(fx) <= tol) break;
    (fx < 0.0 ? lo : hi) = x;
    const double dfx = f.derivative(x);
    double next = dfx != 0.0 ? x - fx / dfx : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x) break;
    x = next;
  }
  return x;
}

}  // namespace

double CubicCoefficients::scale() const {
  return std::max({1.0, std::abs(a2), std::abs(a1), std::abs(a0)});
}

CubicCoefficients characteristic_cubic(const TwoLevelModel& model) {
  const double half_rate = 0.5 * model.rates.total();
  const double gap2 = model.energies.gap() * model.energies.gap();
  const double imbalance = model.amps.weight0() - model.amps.weight1();
  const double a0 = std::abs(imbalance) <= kCaseATol ? 0.0 : gap2 * imbalance * imbalance * half_rate;
  return {half_rate, gap2, a0};
}

CubicCoefficients characteristic_cubic(const TwoLevelHamiltonian& ham,
                                       const LindbladRates& rates) {
  const double half_rate = 0.5 * rates.total();
  const double split2 = (ham.l - ham.h) * (ham.l - ham.h);
  return {half_rate, split2 + 4.0 * std::norm(ham.k), split2 * half_rate};
}

CubicRoots solve_cubic(const CubicCoefficients& cubic) {
  return cubic.a0 == 0.0 ? solve_cubic_case_a(cubic) : solve_cubic_bracketed(cubic);
}

CubicRoots solve_cubic_case_a(const CubicCoefficients& cubic) {
  if (cubic.a0 != 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "Case A closed form needs a0 = 0");
  }
  const auto [plus, minus] = quadratic_roots(cubic.a2, cubic.a1);
  return {0.0, plus, minus, CubicCase::kA};
}

CubicRoots solve_cubic_bracketed(const CubicCoefficients& cubic) {
  const double lo = -cubic.a2;
  const double hi = 0.0;
  const double f_lo = cubic(lo);
  const double f_hi = cubic(hi);
  // Roundoff in f(-a2) is a few ulps of a2^3 and a1 a2.
  const double sign_tol = 64.0 * std::numeric_limits<double>::epsilon() *
                          std::max({1.0, cubic.a2 * cubic.a2 * cubic.a2, cubic.a1 * cubic.a2,
                                    std::abs(cubic.a0)});
  if (f_hi < -sign_tol || f_lo > sign_tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "f(0) = " << f_hi << ", f(-a2) = " << f_lo;
    throw Error(ErrorCode::kBracketFailure, msg.str());
  }

  double root;
  if (std::abs(f_hi) <= sign_tol) {
    root = hi;
  } else if (std::abs(f_lo) <= sign_tol) {
    root = lo;
  } else {
    root = isolate_root(cubic, lo, hi);
  }

  const double p = root + cubic.a2;
  const double q = (root + cubic.a2) * root + cubic.a1;
  auto [plus, minus] = quadratic_roots(p, q);
  plus = newton_polish(cubic, plus);
  if (minus == std::conj(plus) || plus.imag() != 0.0) {
    minus = std::conj(plus);
  } else {
    minus = newton_polish(cubic, minus);
  }
  return {root, plus, minus, cubic.a0 == 0.0 ? CubicCase::kA : CubicCase::kB};
}

double WSpectrum::min_decay_rate() const {
  return std::min({-eigenvalues[1].real(), -eigenvalues[2].real(), -eigenvalues[3].real()});
}

bool WSpectrum::sign_conditions_hold() const {
  return eigenvalues[1].real() < 0.0 && eigenvalues[2].real() < 0.0 &&
         eigenvalues[3].real() < 0.0;
}

Vector4 null_vector(const Matrix4& a, double pivot_tol) {
  Matrix4 m = a;
  std::array<int, 4> col = {0, 1, 2, 3};
  for (int k = 0; k < 3; ++k) {
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    const double pivot = m.bottomRightCorner(4 - k, 4 - k).cwiseAbs().maxCoeff(&r, &c);
    if (pivot < pivot_tol) {
      throw Error(ErrorCode::kDegenerateSpectrum, "eigenvalue has a null space of dimension > 1");
    }
    m.row(k).swap(m.row(k + r));
    m.col(k).swap(m.col(k + c));
    std::swap(col[k], col[k + c]);
    for (int i = k + 1; i < 4; ++i) {
      const Complex factor = m(i, k) / m(k, k);
      m.row(i) -= factor * m.row(k);
    }
  }
  // Free variable is the last permuted column.
  Vector4 y;
  y(3) = 1.0;
  for (int i = 2; i >= 0; --i) {
    Complex acc = 0.0;
    for (int j = i + 1; j < 4; ++j) acc += m(i, j) * y(j);
    y(i) = -acc / m(i, i);
  }
  Vector4 x;
  for (int i = 0; i < 4; ++i) x(col[i]) = y(i);
  return x;
}

WSpectrum w_spectrum(const TwoLevelModel& model) {
  const Matrix4 w = build_w(model);
  WSpectrum s;
  s.cubic = characteristic_cubic(model);
  s.roots = solve_cubic(s.cubic);
  const double shift = 0.5 * model.rates.total();
  s.eigenvalues = {Complex(0.0), Complex(s.roots.real_root - shift), s.roots.plus - shift,
                   s.roots.minus - shift};

  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (std::abs(s.eigenvalues[i] - s.eigenvalues[j]) < kDegeneracyGap) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "eigenvalues " << s.eigenvalues[i] << " and " << s.eigenvalues[j]
            << " are closer than " << kDegeneracyGap;
        throw Error(ErrorCode::kDegenerateSpectrum, msg.str());
      }
    }
  }

  const Matrix4 wt = w.transpose();
  const double pivot_tol = 1e-12 * std::max(1.0, inf_norm(w));
  for (int i = 0; i < 4; ++i) {
    Vector4 v = null_vector(wt - s.eigenvalues[i] * Matrix4::Identity(), pivot_tol);
    if (i == 0) {
      v /= v(0);
    } else {
      Eigen::Index big = 0;
      v.cwiseAbs().maxCoeff(&big);
      v *= std::abs(v(big)) / v(big);
      v.normalize();
    }
    s.o_matrix.col(i) = v;
  }
  s.o_inverse = s.o_matrix.inverse();
  s.o_det = s.o_matrix.determinant();
  for (int j = 0; j < 4; ++j) s.cofactors_row1[j] = s.o_det * s.o_inverse(0, j);
  return s;
}

}  // namespace decolab
