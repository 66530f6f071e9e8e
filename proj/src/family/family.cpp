#include "seifert/family/family.hpp"

#include <sstream>

#include "seifert/exactla/elimination.hpp"
#include "seifert/exactla/spectral.hpp"
#include "seifert/legendrian/front.hpp"

namespace seifert::family {

namespace {

void require_n(int n, const char* op) {
  if (n < 1) throw std::invalid_argument(std::string(op) + ": n must be at least 1, got " + std::to_string(n));
}

std::string str(const BigInt& x) { return x.str(); }

std::string str(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (exactla::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
  os << ')';
  return os.str();
}

std::string str(const Rational& r) { return r.str(); }

std::string str(const exactla::GershgorinDisk& d) {
  std::ostringstream os;
  os << d;
  return os.str();
}

std::string str(bool b) { return b ? "true" : "false"; }

}  // namespace

Check make_check(std::string label, std::string expected, std::string actual) {
  const bool pass = expected == actual;
  return {std::move(label), std::move(expected), std::move(actual), pass};
}

LemmaViolation::LemmaViolation(std::string clause, const std::string& detail)
    : std::logic_error("lemma clause '" + clause + "' failed: " + detail), clause_(std::move(clause)) {}

IntMatrix seifert_matrix_paper(int n) {
  require_n(n, "seifert_matrix_paper");
  const exactla::Index d = 2 * n + 2;
  IntMatrix a = IntMatrix::Zero(d, d);
  for (exactla::Index i = 0; i < d; ++i) a(i, i) = -1;
  for (exactla::Index i = 1; i < d - 1; ++i) {
    a(i, 0) = 1;
    a(d - 1, i) = -1;
  }
  a(d - 1, 0) = 2 * n + 1;
  return a;
}

IntMatrix symmetrized_closed_form(int n) {
  require_n(n, "symmetrized_closed_form");
  const exactla::Index d = 2 * n + 2;
  IntMatrix t = IntMatrix::Zero(d, d);
  for (exactla::Index i = 0; i < d; ++i) t(i, i) = -2;
  for (exactla::Index j = 1; j < d - 1; ++j) {
    t(0, j) = t(j, 0) = 1;
    t(d - 1, j) = t(j, d - 1) = -1;
  }
  t(0, d - 1) = t(d - 1, 0) = 2 * n + 1;
  return t;
}

IntMatrix symmetrized_paper(int n) {
  require_n(n, "symmetrized_paper");
  IntMatrix sum = exactla::symmetrize(seifert_matrix_paper(n));
  if (sum != symmetrized_closed_form(n))
    throw std::logic_error("symmetrized_paper: A + A^T differs from the closed form at n = " + std::to_string(n));
  return sum;
}

IntVector torus_class(int n) {
  require_n(n, "torus_class");
  IntVector w = IntVector::Zero(2 * n + 2);
  w(0) = 1;
  w(2 * n + 1) = 1;
  return w;
}

IntMatrix orthogonal_basis(int n) {
  require_n(n, "orthogonal_basis");
  const exactla::Index d = 2 * n + 2;
  IntMatrix f = IntMatrix::Zero(d, d - 1);
  f(0, 0) = -1;
  f(d - 1, 0) = 1;
  for (exactla::Index k = 1; k < d - 1; ++k) f(k, k) = 1;
  return f;
}

IntMatrix restriction_closed_form(int n) {
  require_n(n, "restriction_closed_form");
  const exactla::Index d = 2 * n + 1;
  IntMatrix b = IntMatrix::Zero(d, d);
  for (exactla::Index j = 0; j < d; ++j) b(j, j) = -2;
  for (exactla::Index j = 1; j < d; ++j) b(0, j) = b(j, 0) = -2;
  b(0, 0) = -(4 * n + 6);
  return b;
}

IntMatrix restrict_to_orthogonal(int n) {
  require_n(n, "restrict_to_orthogonal");
  const IntMatrix f = orthogonal_basis(n);
  IntMatrix gram = f.transpose() * symmetrized_paper(n) * f;
  if (gram != restriction_closed_form(n))
    throw std::logic_error("restrict_to_orthogonal: Gram matrix differs from the closed form at n = " +
                           std::to_string(n));
  return gram;
}

FamilyData family_data(int n) {
  require_n(n, "family_data");
  return {n, seifert_matrix_paper(n), symmetrized_paper(n), torus_class(n), restrict_to_orthogonal(n)};
}

EigenData positive_eigendata(int n) {
  require_n(n, "positive_eigendata");
  const IntMatrix at = symmetrized_paper(n);
  const IntVector w = torus_class(n);
  EigenData e;
  e.lambda = 2 * n - 1;

  const IntVector image = at * w;
  const IntVector scaled = e.lambda * w;
  if (image != scaled) throw LemmaViolation("eigenvector", "A~ w = " + str(image) + ", expected " + str(scaled));

  const IntMatrix shifted = at - e.lambda * IntMatrix::Identity(at.rows(), at.cols());
  const auto ker = exactla::kernel(shifted);
  e.eigen_dim = ker.dimension;
  if (e.eigen_dim != 1)
    throw LemmaViolation("eigenspace dimension", "kernel has dimension " + std::to_string(e.eigen_dim));

  e.generator = exactla::primitive_integral_generator(ker.basis.front());
  if (e.generator != w)
    throw LemmaViolation("integral generator", "generator " + str(e.generator) + ", expected " + str(w));

  IntMatrix b;
  try {
    b = restrict_to_orthogonal(n);
  } catch (const std::logic_error& ex) {
    throw LemmaViolation("restriction matrix", ex.what());
  }
  e.no_other_positive = exactla::certify_no_positive_eigenvalue(b);
  if (!e.no_other_positive)
    throw LemmaViolation("no other positive eigenvalue", "a Gershgorin disk of B meets the positive axis");

  e.first_disk = exactla::gershgorin_disks(b).front();
  const exactla::GershgorinDisk expected{BigInt(-(4 * n + 6)), BigInt(4 * n)};
  if (!(e.first_disk == expected))
    throw LemmaViolation("first Gershgorin disk", "got " + str(e.first_disk) + ", expected " + str(expected));
  return e;
}

std::string to_string(Verdict v) { return v == Verdict::Incomparable ? "Incomparable" : "NoObstruction"; }

std::string to_string(Branch b) {
  switch (b) {
    case Branch::Equal: return "equal";
    case Branch::Rank: return "rank";
    case Branch::Spectral: return "spectral";
  }
  return "?";
}

bool IncomparabilityCertificate::all_passed() const {
  for (const auto& c : reasons)
    if (!c.pass) return false;
  return true;
}

const EigenData& EigenCache::get(int n) {
  auto it = data_.find(n);
  if (it == data_.end()) it = data_.emplace(n, positive_eigendata(n)).first;
  return it->second;
}

bool is_integer_square(const Rational& r) {
  if (r < 0) return false;
  const BigInt num = numerator(r);
  if (denominator(r) != 1) return false;
  const BigInt root = boost::multiprecision::sqrt(num);
  return root * root == num;
}

IncomparabilityCertificate incomparability_certificate(int m, int n, EigenCache* cache) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("incomparability_certificate: m and n must be at least 1");
  IncomparabilityCertificate c;
  c.m = m;
  c.n = n;
  c.direction = "Sigma_" + std::to_string(2 * m + 1) + " <= Sigma_" + std::to_string(2 * n + 1);
  c.rank_small = static_cast<std::size_t>(seifert_matrix_paper(m).rows());
  c.rank_large = static_cast<std::size_t>(seifert_matrix_paper(n).rows());

  if (m == n) {
    c.branch = Branch::Equal;
    c.reasons.push_back(make_check("c = 1 solves c^2 = (2m-1)/(2n-1)", "true", "true"));
    c.verdict = Verdict::NoObstruction;
    return c;
  }

  if (m > n) {
    c.branch = Branch::Rank;
    c.reasons.push_back(make_check("rank H_1 of the smaller surface", std::to_string(2 * m + 2),
                                   std::to_string(c.rank_small)));
    c.reasons.push_back(make_check("rank H_1 of the larger surface", std::to_string(2 * n + 2),
                                   std::to_string(c.rank_large)));
    c.reasons.push_back(make_check("rank exceeds target, so H_1 cannot inject", "true", str(c.rank_small > c.rank_large)));
    c.verdict = c.all_passed() ? Verdict::Incomparable : Verdict::NoObstruction;
    return c;
  }

  c.branch = Branch::Spectral;
  EigenCache local;
  EigenCache& memo = cache ? *cache : local;
  const EigenData& e = memo.get(n);
  const IntVector w_n = torus_class(n);
  const IntVector w_m = torus_class(m);
  c.lambda_n = e.lambda;
  c.eigen_dim = e.eigen_dim;
  c.generator = e.generator;
  c.reasons.push_back(make_check("positive eigenvalue of A~_n", std::to_string(2 * n - 1), str(e.lambda)));
  c.reasons.push_back(make_check("dimension of its eigenspace", "1", std::to_string(e.eigen_dim)));
  c.reasons.push_back(make_check("primitive generator of the eigenspace", str(w_n), str(e.generator)));
  c.reasons.push_back(make_check("B_n has no positive eigenvalue (Gershgorin)", "true", str(e.no_other_positive)));

  c.q_large = exactla::eval_quadratic(symmetrized_paper(n), w_n);
  c.q_small = exactla::eval_quadratic(symmetrized_paper(m), w_m);
  c.reasons.push_back(make_check("Q_n(w_n) = 2(2n-1)", std::to_string(2 * (2 * n - 1)), str(*c.q_large)));
  c.reasons.push_back(make_check("Q_m(w_m) = 2(2m-1)", std::to_string(2 * (2 * m - 1)), str(*c.q_small)));
  const int tb = legendrian::thurston_bennequin(legendrian::family_front(m));
  c.reasons.push_back(make_check("Q_m(w_m) = 2 tb(Lambda_m)", std::to_string(2 * tb), str(*c.q_small)));
  c.reasons.push_back(make_check("Q_m(w_m) > 0 forces the image onto the eigenline", "true", str(*c.q_small > 0)));

  c.ratio = Rational(*c.q_small, *c.q_large);
  c.reasons.push_back(make_check("c^2 = (2m-1)/(2n-1)", str(Rational(2 * m - 1, 2 * n - 1)), str(*c.ratio)));
  c.reasons.push_back(make_check("c^2 is not the square of an integer", "false", str(is_integer_square(*c.ratio))));
  c.verdict = c.all_passed() ? Verdict::Incomparable : Verdict::NoObstruction;
  return c;
}

SweepReport antichain_sweep(int N) {
  if (N < 2) throw std::invalid_argument("antichain_sweep: N must be at least 2");
  SweepReport r;
  r.N = N;
  EigenCache cache;
  for (int m = 1; m <= N; ++m)
    for (int n = 1; n <= N; ++n) {
      if (m == n) continue;
      r.certificates.push_back(incomparability_certificate(m, n, &cache));
      if (r.certificates.back().verdict == Verdict::Incomparable) ++r.incomparable;
    }
  r.all_incomparable = r.incomparable == r.certificates.size();
  return r;
}

}  // namespace seifert::family
