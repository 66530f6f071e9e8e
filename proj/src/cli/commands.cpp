#include "seifert/cli/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "seifert/bands/seifert_form.hpp"
#include "seifert/bands/surface.hpp"
#include "seifert/exactla.hpp"
#include "seifert/family/family.hpp"
#include "seifert/legendrian/resolution.hpp"
#include "seifert/parse_error.hpp"

namespace seifert::cli {

namespace {

std::string str(int x) { return std::to_string(x); }
std::string str(long long x) { return std::to_string(x); }
std::string str(const exactla::BigInt& x) { return x.str(); }
std::string str(bool b) { return b ? "true" : "false"; }

std::string str(const exactla::IntVector& v) {
  std::string out = "(";
  for (exactla::Index i = 0; i < v.size(); ++i) out += (i ? "," : "") + v(i).str();
  return out + ")";
}

std::string str(const exactla::GershgorinDisk& d) {
  std::ostringstream os;
  os << d;
  return os.str();
}

std::string cycle_text(const bands::HomologyCycle& c) {
  std::string out;
  for (const auto& t : c.steps) {
    if (!out.empty()) out += ' ';
    out += std::to_string(t.letter + 1) + (t.forward ? "+" : "-");
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Report cmd_family(int n) {
  if (n < 1) throw std::invalid_argument("family: --n must be at least 1");
  Report r;
  r.command = "family";
  r.inputs["n"] = integer(n);

  const exactla::IntMatrix a = family::seifert_matrix_paper(n);
  const exactla::IntMatrix at = exactla::symmetrize(a);
  const exactla::IntVector w = family::torus_class(n);
  const exactla::IntMatrix b = family::orthogonal_basis(n).transpose() * at * family::orthogonal_basis(n);
  r.results["A"] = matrix(a);
  r.results["Atilde"] = matrix(at);
  r.results["w"] = vector(w);
  r.results["B"] = matrix(b);
  r.check("A + A^T equals the closed form", "true", str(at == family::symmetrized_closed_form(n)));
  r.check("Gram matrix of the f-basis equals the closed form", "true", str(b == family::restriction_closed_form(n)));

  try {
    const auto e = family::positive_eigendata(n);
    r.results["eigendata"] = Json{{"lambda", integer(e.lambda)},
                                  {"eigen_dim", integer(static_cast<long long>(e.eigen_dim))},
                                  {"generator", vector(e.generator)},
                                  {"no_other_positive", e.no_other_positive}};
    r.check("positive eigenvalue", str(2LL * n - 1), str(e.lambda));
    r.check("eigenspace dimension", "1", str(static_cast<long long>(e.eigen_dim)));
    r.check("primitive generator", str(w), str(e.generator));
    r.check("B has no positive eigenvalue", "true", str(e.no_other_positive));
  } catch (const family::LemmaViolation& ex) {
    r.check(ex.clause(), "holds", ex.what());
  }

  Json disks = Json::array();
  for (const auto& d : exactla::gershgorin_disks(b)) disks.push_back(disk(d));
  r.results["gershgorin"] = std::move(disks);
  r.check("row-1 disk", str(exactla::GershgorinDisk{-(4 * n + 6), 4 * n}),
          str(exactla::gershgorin_disks(b).front()));

  const auto q = exactla::eval_quadratic(at, w);
  r.results["Q_w"] = integer(q);
  r.check("Q_n(w) = 2(2n-1)", str(2LL * (2 * n - 1)), str(q));
  return r;
}

Report cmd_certify(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("certify: --m and --n must be at least 1");
  const auto c = family::incomparability_certificate(m, n);
  Report r;
  r.command = "certify";
  r.inputs["m"] = integer(m);
  r.inputs["n"] = integer(n);
  r.results["direction"] = c.direction;
  r.results["branch"] = family::to_string(c.branch);
  r.results["rank_small"] = integer(static_cast<long long>(c.rank_small));
  r.results["rank_large"] = integer(static_cast<long long>(c.rank_large));
  if (c.lambda_n) r.results["lambda_n"] = integer(*c.lambda_n);
  if (c.eigen_dim) r.results["eigen_dim"] = integer(static_cast<long long>(*c.eigen_dim));
  if (c.generator) r.results["generator"] = vector(*c.generator);
  if (c.q_small) r.results["q_small"] = integer(*c.q_small);
  if (c.q_large) r.results["q_large"] = integer(*c.q_large);
  if (c.ratio) r.results["ratio"] = c.ratio->str();
  r.results["verdict"] = family::to_string(c.verdict);
  r.checks = c.reasons;
  const auto expected = m == n ? family::Verdict::NoObstruction : family::Verdict::Incomparable;
  r.check("verdict", family::to_string(expected), family::to_string(c.verdict));
  return r;
}

Report cmd_surface(const bands::BandWord& w) {
  const auto s = bands::homology_basis(w);
  Report r;
  r.command = "surface";
  r.inputs["word"] = w.to_string();

  Json perm = Json::array();
  for (int p : bands::underlying_permutation(w)) perm.push_back(integer(p));
  const int b = bands::boundary_components(w);
  const int comps = s.spine.components();
  r.results["strands"] = integer(w.strands());
  r.results["letters"] = integer(static_cast<long long>(w.size()));
  r.results["permutation"] = std::move(perm);
  r.results["boundary_components"] = integer(b);
  r.results["euler_characteristic"] = integer(bands::euler_characteristic(w));
  r.results["spine_components"] = integer(comps);
  r.results["genus"] = comps == 1 ? integer(bands::genus(w)) : Json();

  Json basis = Json::array();
  for (const auto& c : s.basis) basis.push_back(cycle_text(c));
  r.results["basis"] = std::move(basis);

  const auto v = bands::seifert_matrix(s);
  const auto sym = exactla::symmetrize(v);
  const auto sig = exactla::signature(sym);
  r.results["seifert_matrix"] = matrix(v);
  r.results["symmetrized_form"] = matrix(sym);
  r.results["signature"] = signature(sig);
  r.results["alexander_determinant"] = integer(abs(exactla::determinant(sym)));

  const long long betti = static_cast<long long>(w.size()) - w.strands() + comps;
  r.check("basis size = letters - strands + spine components", str(betti), str(static_cast<long long>(s.basis.size())));
  const exactla::IntMatrix skew = v - v.transpose();
  const long long radical = skew.cols() - exactla::rank(skew);
  r.check("nullity of V - V^T = boundary components - spine components", str(static_cast<long long>(b - comps)),
          str(radical));
  return r;
}

Report cmd_front(const legendrian::FrontDiagram& f, std::optional<int> family_n) {
  Report r;
  r.command = "front";
  r.inputs["front"] = f.to_string();
  if (family_n) r.inputs["family_n"] = integer(*family_n);

  const auto c = legendrian::cusps(f);
  const auto crossings = legendrian::crossing_count(f);
  const auto res = legendrian::ng_resolution(f);
  const int bw = legendrian::blackboard_writhe(res);
  r.results["events"] = integer(static_cast<long long>(f.size()));
  r.results["max_strands"] = integer(f.max_strands());
  r.results["components"] = integer(f.components());
  r.results["writhe"] = integer(legendrian::writhe(f));
  r.results["cusps"] = Json{{"left", integer(static_cast<long long>(c.left))},
                            {"right", integer(static_cast<long long>(c.right))},
                            {"total", integer(static_cast<long long>(c.total()))}};
  r.results["crossings"] = integer(static_cast<long long>(crossings));
  const bool knot = f.components() == 1;
  const int tb = knot ? legendrian::thurston_bennequin(f) : 0;
  r.results["tb"] = knot ? integer(tb) : Json();
  r.results["ng_resolution"] = Json{{"crossings", integer(static_cast<long long>(res.crossings.size()))},
                                    {"blackboard_writhe", integer(bw)}};

  r.check("resolution crossings = front crossings + right cusps", str(static_cast<long long>(crossings + c.right)),
          str(static_cast<long long>(res.crossings.size())));
  if (knot) r.check("tb = blackboard writhe of the resolution", str(tb), str(bw));
  if (family_n) r.check("tb = 2n-1", str(2LL * *family_n - 1), knot ? str(tb) : "none");
  return r;
}

Report cmd_verify(int N, int spectral_max) {
  if (N < 2) throw std::invalid_argument("verify: --N must be at least 2");
  if (spectral_max < 0) throw std::invalid_argument("verify: --spectral-max must be nonnegative");
  Report r;
  r.command = "verify";
  r.inputs["N"] = integer(N);
  r.inputs["spectral_max"] = integer(spectral_max);

  long long closed = 0, lemma = 0, quad = 0, tb = 0, sig = 0;
  const int sig_top = std::min(N, spectral_max);
  std::string first_failure;
  for (int n = 1; n <= N; ++n) {
    const auto a = family::seifert_matrix_paper(n);
    const auto at = exactla::symmetrize(a);
    const auto f = family::orthogonal_basis(n);
    if (at == family::symmetrized_closed_form(n) && exactla::IntMatrix(f.transpose() * at * f) ==
                                                        family::restriction_closed_form(n))
      ++closed;
    try {
      family::positive_eigendata(n);
      ++lemma;
    } catch (const family::LemmaViolation& ex) {
      if (first_failure.empty()) first_failure = "n=" + std::to_string(n) + ": " + ex.what();
    }
    if (exactla::eval_quadratic(at, family::torus_class(n)) == 2 * (2 * n - 1)) ++quad;
    if (legendrian::thurston_bennequin(legendrian::family_front(n)) == 2 * n - 1) ++tb;
    if (n <= sig_top) {
      const exactla::SignatureTriple expected{1, 0, static_cast<std::size_t>(2 * n + 1)};
      if (exactla::signature(at) == expected) ++sig;
    }
  }

  const auto sweep = family::antichain_sweep(N);
  long long ratio_ok = 0, rank_ok = 0, spectral = 0, ranked = 0;
  for (const auto& c : sweep.certificates) {
    if (c.branch == family::Branch::Spectral) {
      ++spectral;
      if (c.ratio && *c.ratio == exactla::Rational(2 * c.m - 1, 2 * c.n - 1)) ++ratio_ok;
    } else if (c.branch == family::Branch::Rank) {
      ++ranked;
      if (c.rank_small == static_cast<std::size_t>(2 * c.m + 2) && c.rank_small > c.rank_large) ++rank_ok;
    }
    if (first_failure.empty() && !c.all_passed())
      first_failure = "certificate (" + std::to_string(c.m) + "," + std::to_string(c.n) + ") has a failed check";
  }
  long long diagonal = 0;
  for (int k = 1; k <= N; ++k)
    if (family::incomparability_certificate(k, k).verdict == family::Verdict::NoObstruction) ++diagonal;

  const long long pairs = static_cast<long long>(N) * (N - 1);
  r.results["family_members"] = integer(N);
  r.results["closed_forms"] = integer(closed);
  r.results["lemma"] = integer(lemma);
  r.results["signatures_checked"] = integer(sig);
  r.results["pairs"] = integer(static_cast<long long>(sweep.certificates.size()));
  r.results["incomparable"] = integer(static_cast<long long>(sweep.incomparable));
  r.results["rank_branch"] = integer(ranked);
  r.results["spectral_branch"] = integer(spectral);
  r.results["diagonal_no_obstruction"] = integer(diagonal);
  r.results["first_failure"] = first_failure.empty() ? Json() : Json(first_failure);

  r.check("closed forms of A~ and B", str(N), str(closed));
  r.check("lemma clauses", str(N), str(lemma));
  r.check("Q_n(w) = 2(2n-1)", str(N), str(quad));
  r.check("tb of the model fronts = 2n-1", str(N), str(tb));
  r.check("signature of A~ = (1, 0, 2n+1) by Sturm counting", str(sig_top), str(sig));
  r.check("ordered pairs certified Incomparable", str(pairs), str(static_cast<long long>(sweep.incomparable)));
  r.check("spectral ratios equal (2m-1)/(2n-1)", str(pairs / 2), str(ratio_ok));
  r.check("rank branches with 2m+2 > 2n+2", str(pairs / 2), str(rank_ok));
  r.check("diagonal pairs give NoObstruction", str(N), str(diagonal));
  return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Seifert forms, front invariants and antichain certificates", "seifert"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string format = "text";
  const auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  int fam_n = 0;
  auto* fam = app.add_subcommand("family", "Matrices and eigendata of one family member");
  fam->add_option("--n", fam_n, "Family index n >= 1")->required();
  add_format(fam);

  int cert_m = 0, cert_n = 0;
  auto* cert = app.add_subcommand("certify", "Incomparability certificate for a pair (m, n)");
  cert->add_option("--m", cert_m, "Index of the candidate minor")->required();
  cert->add_option("--n", cert_n, "Index of the ambient surface")->required();
  add_format(cert);

  std::string word, word_file;
  auto* surf = app.add_subcommand("surface", "Canonical surface of a band word");
  auto* surf_in = surf->add_option_group("input");
  surf_in->add_option("--word", word, "Inline band word, e.g. \"strands=2; a(1,2) a(1,2)\"");
  surf_in->add_option("--file", word_file, "File holding a band word");
  surf_in->require_option(1);
  add_format(surf);

  std::string front_text, front_file;
  int family_n = 0;
  auto* front = app.add_subcommand("front", "Invariants of a Legendrian front");
  auto* front_in = front->add_option_group("input");
  front_in->add_option("--front", front_text, "Inline front, e.g. \"L0 R0\"");
  front_in->add_option("--file", front_file, "File holding a front");
  auto* family_opt = front_in->add_option("--family-n", family_n, "Use the model front of the family member n");
  front_in->require_option(1);
  add_format(front);

  int verify_n = 10, spectral_max = 15;
  auto* verify = app.add_subcommand("verify", "Full verification sweep over the family");
  verify->add_option("--N", verify_n, "Largest family index")->capture_default_str();
  verify->add_option("--spectral-max", spectral_max, "Largest n for the Sturm signature cross-check")->capture_default_str();
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  Report report;
  try {
    if (fam->parsed()) {
      report = cmd_family(fam_n);
    } else if (cert->parsed()) {
      report = cmd_certify(cert_m, cert_n);
    } else if (surf->parsed()) {
      report = cmd_surface(bands::BandWord::parse(word_file.empty() ? word : read_file(word_file)));
    } else if (front->parsed()) {
      if (family_opt->count() > 0) {
        if (family_n < 1) throw std::invalid_argument("front: --family-n must be at least 1");
        report = cmd_front(legendrian::family_front(family_n), family_n);
      } else {
        report = cmd_front(legendrian::FrontDiagram::parse(front_file.empty() ? front_text : read_file(front_file)));
      }
    } else {
      report = cmd_verify(verify_n, spectral_max);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const legendrian::InvalidFront& e) {
    err << "invalid front: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << '\n';
    return kFailedCheck;
  }

  const Json doc = to_json(report);
  if (format == "json")
    out << doc.dump(2) << '\n';
  else
    out << render_text(doc);
  return report.passed() ? kSuccess : kFailedCheck;
}

}  // namespace seifert::cli
