#include "decolab/linalg.hpp"

#include <cmath>

namespace decolab {
namespace {

constexpr double kScaledNormBound = 0.5;
constexpr double kTermCutoff = 1e-18;
constexpr int kMaxTerms = 64;

template <typename M>
M expm_impl(const M& a) {
  const double norm = inf_norm(a);
  int squarings = 0;
  if (norm > kScaledNormBound) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kScaledNormBound)));
  }
  const M scaled = a * std::ldexp(1.0, -squarings);

  M result = M::Identity(a.rows(), a.cols());
  M term = M::Identity(a.rows(), a.cols());
  for (int n = 1; n <= kMaxTerms; ++n) {
    term = term * scaled / static_cast<double>(n);
    result += term;
    if (inf_norm(term) < kTermCutoff) break;
  }
  for (int i = 0; i < squarings; ++i) {
    result = (result * result).eval();
  }
  return result;
}

}  // namespace

MatrixX expm(const MatrixX& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "expm needs a square matrix");
  }
  return expm_impl(a);
}

Matrix4 expm(const Matrix4& a) { return expm_impl(a); }

}  // namespace decolab
