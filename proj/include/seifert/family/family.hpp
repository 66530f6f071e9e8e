#ifndef SEIFERT_FAMILY_FAMILY_HPP
#define SEIFERT_FAMILY_FAMILY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seifert/exactla/types.hpp"

namespace seifert::family {

using exactla::BigInt;
using exactla::IntMatrix;
using exactla::IntVector;
using exactla::Rational;

/// A labelled comparison; pass implies expected == actual.
struct Check {
  std::string label;
  std::string expected;
  std::string actual;
  bool pass = false;
};

Check make_check(std::string label, std::string expected, std::string actual);

/// Raised when a clause of the eigenvalue lemma fails to verify.
class LemmaViolation : public std::logic_error {
 public:
  LemmaViolation(std::string clause, const std::string& detail);
  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

/// Seifert matrix of Sigma_{2n+1}, size 2n+2: -1 on the diagonal, 1 in column
/// 1 for rows 2..2n+1, 2n+1 at (2n+2, 1), -1 in row 2n+2 for columns
/// 2..2n+1. Throws std::invalid_argument for n < 1.
IntMatrix seifert_matrix_paper(int n);

/// The displayed closed form of A + A^T, built entry by entry.
IntMatrix symmetrized_closed_form(int n);

/// A + A^T, after checking it against the closed form (std::logic_error on
/// any mismatch).
IntMatrix symmetrized_paper(int n);

/// w = e_1 + e_{2n+2}.
IntVector torus_class(int n);

/// Columns f_1 = -e_1 + e_{2n+2}, f_k = e_k for k = 2..2n+1; a basis of the
/// orthogonal complement of w.
IntMatrix orthogonal_basis(int n);

/// -(4n+6) at (1,1), -2 elsewhere on the diagonal and the first row and
/// column, 0 otherwise.
IntMatrix restriction_closed_form(int n);

/// Gram matrix F^T (A + A^T) F, after checking it against the closed form.
IntMatrix restrict_to_orthogonal(int n);

struct FamilyData {
  int n = 0;
  IntMatrix A;
  IntMatrix Atilde;
  IntVector w;
  IntMatrix B;
};

FamilyData family_data(int n);

struct EigenData {
  BigInt lambda;
  std::size_t eigen_dim = 0;
  IntVector generator;
  bool no_other_positive = false;
  exactla::GershgorinDisk first_disk;
};

/// Re-proves each clause of the lemma at this n; throws LemmaViolation naming
/// the first clause that fails.
EigenData positive_eigendata(int n);

enum class Verdict { Incomparable, NoObstruction };
enum class Branch { Equal, Rank, Spectral };

std::string to_string(Verdict v);
std::string to_string(Branch b);

struct IncomparabilityCertificate {
  int m = 0;
  int n = 0;
  Branch branch = Branch::Equal;
  /// The injection under test, Sigma_{2m+1} into Sigma_{2n+1}.
  std::string direction;
  std::size_t rank_small = 0;
  std::size_t rank_large = 0;
  // Spectral branch only.
  std::optional<BigInt> lambda_n;
  std::optional<std::size_t> eigen_dim;
  std::optional<IntVector> generator;
  std::optional<BigInt> q_small;
  std::optional<BigInt> q_large;
  std::optional<Rational> ratio;
  Verdict verdict = Verdict::NoObstruction;
  std::vector<Check> reasons;

  bool all_passed() const;
};

/// Memo of positive_eigendata by n.
class EigenCache {
 public:
  const EigenData& get(int n);

 private:
  std::map<int, EigenData> data_;
};

/// p/q is the square of an integer iff q = 1 and p is a perfect square.
bool is_integer_square(const Rational& r);

/// Certificate that Sigma_{2m+1} does not embed in Sigma_{2n+1} as a surface
/// minor, or NoObstruction when m = n. Throws std::invalid_argument unless
/// m, n >= 1.
IncomparabilityCertificate incomparability_certificate(int m, int n, EigenCache* cache = nullptr);

struct SweepReport {
  int N = 0;
  std::vector<IncomparabilityCertificate> certificates;
  std::size_t incomparable = 0;
  bool all_incomparable = false;
};

/// All ordered pairs m != n in 1..N. Throws std::invalid_argument for N < 2.
SweepReport antichain_sweep(int N);

}  // namespace seifert::family

#endif  // SEIFERT_FAMILY_FAMILY_HPP
