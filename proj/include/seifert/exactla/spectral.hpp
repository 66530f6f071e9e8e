#ifndef SEIFERT_EXACTLA_SPECTRAL_HPP
#define SEIFERT_EXACTLA_SPECTRAL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "seifert/exactla/elimination.hpp"
#include "seifert/exactla/polynomial.hpp"
#include "seifert/exactla/types.hpp"

namespace seifert::exactla {

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* op) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string(op) + ": matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected square");
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == m.cols() && m == m.transpose();
}

template <typename Derived>
void require_symmetric(const Eigen::MatrixBase<Derived>& m, const char* op) {
  if (!is_symmetric(m)) throw std::invalid_argument(std::string(op) + ": matrix is not symmetric");
}

template <typename Derived>
Matrix<typename Derived::Scalar> transpose(const Eigen::MatrixBase<Derived>& m) {
  return m.transpose();
}

/// V + V^T. Note the convention: no factor 1/2, so the diagonal is twice
/// the diagonal of V.
template <typename Derived>
Matrix<typename Derived::Scalar> symmetrize(const Eigen::MatrixBase<Derived>& v) {
  require_square(v, "symmetrize");
  return v + v.transpose();
}

/// det(tI - M) by Faddeev-LeVerrier. Every division by k is exact over the
/// integers, so no rationals appear.
template <typename Derived>
IntPoly char_poly_faddeev_leverrier(const Eigen::MatrixBase<Derived>& m) {
  require_square(m, "char_poly");
  const Index n = m.rows();
  const IntMatrix a = m;
  IntPoly c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = 1;
  IntMatrix acc = IntMatrix::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    IntMatrix next = a * acc;
    for (Index i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    acc = std::move(next);
    BigInt tr(0);
    for (Index i = 0; i < n; ++i) tr += a.row(i).dot(acc.col(i));
    c[static_cast<std::size_t>(n - k)] = -tr / BigInt(k);
  }
  return c;
}

/// det(tI - M) by Berkowitz's division-free algorithm.
template <typename Derived>
IntPoly char_poly_berkowitz(const Eigen::MatrixBase<Derived>& m) {
  require_square(m, "char_poly");
  const Index n = m.rows();
  if (n == 0) return IntPoly{BigInt(1)};
  const IntMatrix a = m;

  // Coefficients from the highest degree down.
  std::vector<BigInt> v{BigInt(1), BigInt(-a(0, 0))};
  for (Index r = 1; r < n; ++r) {
    const IntMatrix sub = a.topLeftCorner(r, r);
    const IntVector col = a.col(r).head(r);
    const IntVector row = a.row(r).head(r).transpose();

    std::vector<BigInt> q(static_cast<std::size_t>(r + 2));
    q[0] = 1;
    q[1] = -a(r, r);
    IntVector power = col;
    for (Index k = 2; k <= r + 1; ++k) {
      q[static_cast<std::size_t>(k)] = -row.dot(power);
      if (k <= r) power = sub * power;
    }

    std::vector<BigInt> next(static_cast<std::size_t>(r + 2), BigInt(0));
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j < v.size() && j <= i; ++j) next[i] += q[i - j] * v[j];
    v = std::move(next);
  }
  return IntPoly(v.rbegin(), v.rend());
}

template <typename Derived>
IntPoly char_poly(const Eigen::MatrixBase<Derived>& m) {
  return char_poly_faddeev_leverrier(m);
}

/// Exact inertia of a symmetric integer matrix. Zeros come from the
/// multiplicity of t in det(tI - M), cross-checked against the kernel
/// dimension; positives and negatives come from Sturm counts along the
/// repeated-gcd chain of the remaining factor.
template <typename Derived>
SignatureTriple signature(const Eigen::MatrixBase<Derived>& m) {
  require_symmetric(m, "signature");
  const IntPoly p = char_poly(m);
  const auto [rest, zeros] = poly::strip_zero_roots(p);
  const auto nullity = static_cast<std::size_t>(m.cols() - rank(m));
  if (nullity != zeros)
    throw std::logic_error("signature: zero-root multiplicity disagrees with kernel dimension");

  SignatureTriple s;
  s.zeros = zeros;
  s.positives = poly::count_roots_with_multiplicity(rest, RootRegion::Positive);
  s.negatives = poly::count_roots_with_multiplicity(rest, RootRegion::Negative);
  if (s.dimension() != static_cast<std::size_t>(m.rows()))
    throw std::logic_error("signature: root counts do not sum to the dimension");
  return s;
}

template <typename Derived>
std::vector<GershgorinDisk> gershgorin_disks(const Eigen::MatrixBase<Derived>& m) {
  require_square(m, "gershgorin_disks");
  std::vector<GershgorinDisk> disks;
  disks.reserve(static_cast<std::size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i) {
    BigInt radius(0);
    for (Index j = 0; j < m.cols(); ++j)
      if (j != i) radius += abs(BigInt(m(i, j)));
    disks.push_back({BigInt(m(i, i)), radius});
  }
  return disks;
}

/// Sound but incomplete: true only if every disk lies in the closed left
/// half-plane, so no eigenvalue is positive. Zero may still be an eigenvalue.
template <typename Derived>
bool certify_no_positive_eigenvalue(const Eigen::MatrixBase<Derived>& m) {
  require_symmetric(m, "certify_no_positive_eigenvalue");
  for (const auto& d : gershgorin_disks(m))
    if (d.center + d.radius > 0) return false;
  return true;
}

template <typename DerivedM, typename DerivedX>
BigInt eval_quadratic(const Eigen::MatrixBase<DerivedM>& m, const Eigen::MatrixBase<DerivedX>& x) {
  if (m.rows() != m.cols() || m.cols() != x.size())
    throw std::invalid_argument("eval_quadratic: dimension mismatch");
  const IntVector v = x;
  const IntVector mv = m * v;
  return v.dot(mv);
}

}  // namespace seifert::exactla

#endif  // SEIFERT_EXACTLA_SPECTRAL_HPP
