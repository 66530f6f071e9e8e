#ifndef SEIFERT_EXACTLA_TYPES_HPP
#define SEIFERT_EXACTLA_TYPES_HPP

#include <cstddef>
#include <ostream>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace seifert::exactla {

/// Arbitrary-precision integer. Expression templates are disabled so the type
/// composes cleanly with Eigen's own expression machinery.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using IntVector = Vector<BigInt>;
using RatVector = Vector<Rational>;
using Index = Eigen::Index;

/// Closed disk D(center, radius) in the complex plane. Centers are real since
/// every matrix handled here has integer entries.
struct GershgorinDisk {
  BigInt center;
  BigInt radius;

  bool operator==(const GershgorinDisk&) const = default;
};

/// Inertia of a real symmetric matrix: eigenvalue counts by sign, with
/// multiplicity.
struct SignatureTriple {
  std::size_t positives = 0;
  std::size_t zeros = 0;
  std::size_t negatives = 0;

  std::size_t dimension() const { return positives + zeros + negatives; }
  bool operator==(const SignatureTriple&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const SignatureTriple& s) {
  return os << '(' << s.positives << ", " << s.zeros << ", " << s.negatives << ')';
}

inline std::ostream& operator<<(std::ostream& os, const GershgorinDisk& d) {
  return os << "D(" << d.center << ", " << d.radius << ')';
}

/// Builds an integer matrix from a row-major initializer, mostly for tests and
/// closed-form constructions.
inline IntMatrix make_matrix(Index rows, Index cols, std::initializer_list<long long> values) {
  IntMatrix m(rows, cols);
  auto it = values.begin();
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = BigInt(*it++);
  return m;
}

inline IntVector make_vector(std::initializer_list<long long> values) {
  IntVector v(static_cast<Index>(values.size()));
  Index k = 0;
  for (long long x : values) v(k++) = BigInt(x);
  return v;
}

}  // namespace seifert::exactla

#endif  // SEIFERT_EXACTLA_TYPES_HPP
