#ifndef SEIFERT_EXACTLA_ELIMINATION_HPP
#define SEIFERT_EXACTLA_ELIMINATION_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/integer.hpp>

#include "seifert/exactla/types.hpp"

namespace seifert::exactla {

/// Fraction-free row echelon form (Bareiss). After elimination the entry at
/// (k, pivot_cols[k]) is the leading principal minor of order k + 1 on the
/// chosen pivot rows and columns, and every intermediate division is exact.
template <typename Scalar>
struct Echelon {
  Matrix<Scalar> form;
  std::vector<Index> pivot_cols;
  int row_swap_sign = 1;

  Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

template <typename Derived>
Echelon<typename Derived::Scalar> bareiss_echelon(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> out;
  out.form = m;
  auto& a = out.form;
  const Index rows = a.rows();
  const Index cols = a.cols();

  Scalar prev(1);
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      a.row(p).swap(a.row(r));
      out.row_swap_sign = -out.row_swap_sign;
    }
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j) {
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return bareiss_echelon(m).rank();
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const Index n = m.rows();
  if (n == 0) return Scalar(1);
  const auto e = bareiss_echelon(m);
  if (e.rank() < n) return Scalar(0);
  return e.row_swap_sign > 0 ? Scalar(e.form(n - 1, n - 1)) : Scalar(-e.form(n - 1, n - 1));
}

/// Clears denominators and removes content: the primitive integer vector on
/// the line through v, first nonzero entry positive.
inline IntVector primitive_integral_generator(const RatVector& v) {
  BigInt den(1);
  bool nonzero = false;
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) == 0) continue;
    nonzero = true;
    den = boost::multiprecision::lcm(den, BigInt(denominator(v(i))));
  }
  if (!nonzero) throw std::invalid_argument("primitive_integral_generator: zero vector");

  IntVector w(v.size());
  BigInt content(0);
  for (Index i = 0; i < v.size(); ++i) {
    w(i) = BigInt(numerator(v(i))) * (den / BigInt(denominator(v(i))));
    content = boost::multiprecision::gcd(content, w(i));
  }
  content = abs(content);
  for (Index i = 0; i < w.size(); ++i) w(i) /= content;
  for (Index i = 0; i < w.size(); ++i) {
    if (w(i) == 0) continue;
    if (w(i) < 0) w = -w;
    break;
  }
  return w;
}

inline IntVector primitive_integral_generator(const IntVector& v) {
  return primitive_integral_generator(RatVector(v.template cast<Rational>()));
}

struct KernelBasis {
  Index dimension = 0;
  /// Primitive integer vectors (stored exactly as rationals), one per free
  /// column of the echelon form, in increasing free-column order.
  std::vector<RatVector> basis;
};

/// Rational null space of an integer matrix via fraction-free elimination and
/// back substitution.
template <typename Derived>
KernelBasis kernel(const Eigen::MatrixBase<Derived>& m) {
  const auto e = bareiss_echelon(m);
  const Index cols = m.cols();
  const auto& a = e.form;

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  KernelBasis out;
  out.dimension = cols - e.rank();
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    RatVector x = RatVector::Zero(cols);
    x(f) = 1;
    for (Index k = e.rank() - 1; k >= 0; --k) {
      const Index pc = e.pivot_cols[static_cast<std::size_t>(k)];
      Rational s(0);
      for (Index j = pc + 1; j < cols; ++j) {
        if (a(k, j) != 0 && x(j) != 0) s += Rational(BigInt(a(k, j))) * x(j);
      }
      x(pc) = -s / Rational(BigInt(a(k, pc)));
    }
    out.basis.emplace_back(primitive_integral_generator(x).template cast<Rational>());
  }
  return out;
}

}  // namespace seifert::exactla

#endif  // SEIFERT_EXACTLA_ELIMINATION_HPP
