// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "seifert/bands/ribbon.hpp"
#include "seifert/bands/seifert_form.hpp"
#include "seifert/bands/surface.hpp"
#include "seifert/cli/commands.hpp"
#include "seifert/exactla.hpp"
#include "seifert/family/family.hpp"
#include "seifert/legendrian/front.hpp"
#include "seifert/legendrian/resolution.hpp"
#include "support/linking_oracle.hpp"
#include "support/random_front.hpp"
#include "support/random_matrix.hpp"

using namespace seifert;
using exactla::BigInt;
using exactla::Index;
using exactla::IntMatrix;
using exactla::IntVector;
using exactla::SignatureTriple;

namespace {

// Records the first failure so the summary line can say what broke.
struct Criterion {
  std::string failure;
  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

std::string at(int n) { return " at n = " + std::to_string(n); }

void proposition(Criterion& c) {
  for (int n = 1; n <= 50; ++n) {
    const IntMatrix a = family::seifert_matrix_paper(n);
    const Index d = 2 * n + 2;
    c.expect(a.rows() == d && a.cols() == d, "size of A" + at(n));
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) {
        long long v = 0;
        if (i == j) v = -1;
        else if (j == 0 && i <= 2 * n) v = 1;
        else if (i == d - 1) v = j == 0 ? 2 * n + 1 : -1;
        c.expect(a(i, j) == v, "entry of A" + at(n));
      }
    const IntMatrix s = family::symmetrized_paper(n);
    c.expect(s == family::symmetrized_closed_form(n), "closed form of A~" + at(n));
    c.expect(s == IntMatrix(a + a.transpose()), "A + A^T" + at(n));
    c.expect(s(0, d - 1) == 2 * n + 1 && s(d - 1, 0) == 2 * n + 1, "corner of A~" + at(n));
  }
}

void lemma(Criterion& c) {
  for (int n = 1; n <= 30; ++n) {
    const IntMatrix s = family::symmetrized_paper(n);
    const IntVector w = family::torus_class(n);
    c.expect(IntVector(s * w) == IntVector(BigInt(2 * n - 1) * w), "A~ w = (2n-1) w" + at(n));
    const family::EigenData e = family::positive_eigendata(n);
    c.expect(e.eigen_dim == 1, "eigenspace dimension" + at(n));
    c.expect(e.generator == w, "primitive generator" + at(n));
    const IntMatrix b = family::restrict_to_orthogonal(n);
    c.expect(b == family::restriction_closed_form(n) && b(0, 0) == -(4 * n + 6), "closed form of B" + at(n));
    c.expect(e.no_other_positive && exactla::certify_no_positive_eigenvalue(b), "Gershgorin certificate" + at(n));
    c.expect(e.first_disk == exactla::GershgorinDisk{BigInt(-(4 * n + 6)), BigInt(4 * n)}, "row-1 disk" + at(n));
  }
}

// Descartes' rule is exact for real-rooted polynomials.
SignatureTriple char_poly_signature(const IntMatrix& m) {
  auto p = oracle::cofactor_char_poly(m);
  std::size_t zeros = 0;
  while (zeros < p.size() && p[zeros] == 0) ++zeros;
  p.erase(p.begin(), p.begin() + static_cast<long>(zeros));
  return {exactla::poly::descartes_sign_changes(p, exactla::RootRegion::Positive), zeros,
          exactla::poly::descartes_sign_changes(p, exactla::RootRegion::Negative)};
}

void spectral(Criterion& c) {
  for (int n = 1; n <= 15; ++n) {
    const IntMatrix s = family::symmetrized_paper(n);
    const SignatureTriple sig = exactla::signature(s);
    c.expect(sig == SignatureTriple{1, 0, static_cast<std::size_t>(2 * n + 1)}, "signature" + at(n));
    c.expect(static_cast<std::size_t>(exactla::kernel(s).dimension) == sig.zeros, "kernel vs zero count" + at(n));
    if (n <= 3) c.expect(char_poly_signature(s) == sig, "cofactor oracle" + at(n));
  }
}

void sweep(Criterion& c) {
  const auto report = family::antichain_sweep(30);
  c.expect(report.certificates.size() == 870 && report.all_incomparable, "sweep verdicts");
  for (const auto& cert : report.certificates) {
    const std::string pair = " for (" + std::to_string(cert.m) + ", " + std::to_string(cert.n) + ")";
    c.expect(cert.verdict == family::Verdict::Incomparable && cert.all_passed(), "verdict" + pair);
    if (cert.m < cert.n)
      c.expect(cert.ratio && *cert.ratio == exactla::Rational(2 * cert.m - 1, 2 * cert.n - 1), "ratio" + pair);
    else
      c.expect(cert.rank_small == static_cast<std::size_t>(2 * cert.m + 2) && cert.rank_small > cert.rank_large,
               "rank inequality" + pair);
  }
  for (int k = 1; k <= 30; ++k) {
    const std::string ks = std::to_string(k);
    const char* argv[] = {"seifert", "certify", "--m", ks.c_str(), "--n", ks.c_str(), "--format", "json"};
    std::ostringstream out, err;
    const int code = cli::run(8, argv, out, err);
    const auto j = cli::Json::parse(out.str());
    c.expect(code == 0 && j["results"]["verdict"] == "NoObstruction", "certify k k" + at(k));
  }
}

void tb(Criterion& c) {
  for (int n = 1; n <= 100; ++n)
    c.expect(legendrian::thurston_bennequin(legendrian::family_front(n)) == 2 * n - 1, "tb of the family front" + at(n));
  c.expect(legendrian::thurston_bennequin(legendrian::unknot_front()) == -1, "tb of the unknot");
}

void resolution(Criterion& c) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 1000; ++trial) {
    const legendrian::FrontDiagram f(oracle::random_front(rng, 12, true));
    c.expect(f.size() <= 12 && f.components() == 1, "random front shape");
    c.expect(legendrian::thurston_bennequin(f) == legendrian::blackboard_writhe(legendrian::ng_resolution(f)),
             "tb vs blackboard writhe for " + f.to_string());
  }
}

void band_suite(Criterion& c) {
  // Hand count first: every entry through the cone oracle.
  for (int k = 1; k <= 2; ++k) {
    const auto s = bands::homology_basis(bands::BandWord::torus(2 * k + 1));
    const auto g = static_cast<int>(s.basis.size());
    const bands::ribbon::Model model(s, 2 * g);
    const IntMatrix v = bands::seifert_matrix(s);
    for (int a = 0; a < g; ++a)
      for (int b = 0; b < g; ++b)
        c.expect(oracle::linking_number(model.curve(static_cast<std::size_t>(a), 2 * a + 1),
                                        model.push_off(static_cast<std::size_t>(b), 2 * b + 2)) == v(a, b),
                 "hand count" + at(k));
  }
  for (int k = 1; k <= 10; ++k) {
    const auto w = bands::BandWord::torus(2 * k + 1);
    const auto s = bands::homology_basis(w);
    IntMatrix expected = IntMatrix::Zero(2 * k, 2 * k);
    for (int i = 0; i < 2 * k; ++i) {
      expected(i, i) = -1;
      if (i + 1 < 2 * k) expected(i, i + 1) = 1;
    }
    c.expect(bands::seifert_matrix(s) == expected, "bidiagonal Seifert matrix" + at(k));
    c.expect(exactla::signature(bands::symmetrized_form(s)) == SignatureTriple{0, 0, static_cast<std::size_t>(2 * k)},
             "signature" + at(k));
    c.expect(bands::alexander_determinant(s) == 2 * k + 1, "Alexander determinant" + at(k));
    c.expect(bands::boundary_components(w) == 1, "boundary components" + at(k));
    c.expect(bands::genus(w) == k, "genus" + at(k));
  }
}

bands::BandWord random_word(std::mt19937_64& rng) {
  const int strands = 2 + static_cast<int>(rng() % 5);
  std::vector<bands::BandGenerator> letters;
  const int len = static_cast<int>(rng() % 12);
  for (int t = 0; t < len; ++t) {
    int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(strands));
    int j = 1 + static_cast<int>(rng() % static_cast<unsigned>(strands - 1));
    if (j >= i) ++j;
    letters.push_back({std::min(i, j), std::max(i, j)});
  }
  return bands::BandWord(strands, letters);
}

void properties(Criterion& c) {
  std::mt19937_64 rng(8);
  std::size_t cases = 0;
  for (int t = 0; t < 2500; ++t, ++cases) {
    const Index n = 1 + static_cast<Index>(rng() % 6);
    const IntMatrix s = oracle::random_symmetric(rng, n, 4, rng() % 3 == 0);
    const IntMatrix p = oracle::random_invertible(rng, n);
    c.expect(exactla::signature(IntMatrix(p.transpose() * s * p)) == exactla::signature(s), "Sylvester invariance");
  }
  for (int t = 0; t < 2500; ++t, ++cases) {
    const IntMatrix s = oracle::random_dominant_symmetric(rng, 8);
    if (exactla::certify_no_positive_eigenvalue(s))
      c.expect(exactla::signature(s).positives == 0, "Gershgorin soundness");
  }
  for (int t = 0; t < 2500; ++t, ++cases) {
    const Index n = 1 + static_cast<Index>(rng() % 8);
    const IntMatrix s = oracle::random_symmetric(rng, n, 50, false);
    const IntVector x = oracle::random_matrix(rng, n, 1, 1000).col(0);
    const BigInt k(oracle::uniform(rng, 1000000));
    c.expect(exactla::eval_quadratic(s, IntVector(k * x)) == k * k * exactla::eval_quadratic(s, x), "scaling law");
  }
  for (int t = 0; t < 2500; ++t, ++cases) {
    const auto w = random_word(rng);
    const int b = bands::boundary_components(w);
    const std::size_t shift = w.size() == 0 ? 0 : rng() % w.size();
    c.expect(bands::boundary_components(w.rotated(shift)) == b, "rotation invariance");
  }
  c.expect(cases == 10000, "case count");
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    std::function<void(Criterion&)> run;
  };
  const Entry entries[] = {
      {1, "Seifert matrix and symmetrization closed forms, n = 1..50", proposition},
      {2, "eigenvector, eigenspace, restriction and Gershgorin certificate, n = 1..30", lemma},
      {3, "Sturm signature (1, 0, 2n+1), n = 1..15", spectral},
      {4, "antichain sweep N = 30 (870 pairs) and certify k k, k = 1..30", sweep},
      {5, "tb(family_front(n)) = 2n-1, n = 1..100; tb(unknot) = -1", tb},
      {6, "tb = blackboard writhe on 1000 random fronts", resolution},
      {7, "band surfaces of (a12)^(2k+1), k = 1..10", band_suite},
      {8, "10000 randomized property cases", properties},
  };
  int failed = 0;
  for (const auto& e : entries) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failure.empty();
    failed += !ok;
    std::printf("[%s] %d %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", e.id, e.title, secs, ok ? "" : ": ",
                c.failure.c_str());
  }
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
