#include "seifert/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace seifert::cli {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::check(std::string label, std::string expected, std::string actual) {
  checks.push_back(family::make_check(std::move(label), std::move(expected), std::move(actual)));
}

Json integer(const exactla::BigInt& x) { return x.str(); }
Json integer(long long x) { return std::to_string(x); }

Json matrix(const exactla::IntMatrix& m) {
  Json entries = Json::array();
  for (exactla::Index i = 0; i < m.rows(); ++i)
    for (exactla::Index j = 0; j < m.cols(); ++j) entries.push_back(m(i, j).str());
  return Json{{"rows", integer(m.rows())}, {"cols", integer(m.cols())}, {"entries", std::move(entries)}};
}

Json vector(const exactla::IntVector& v) {
  Json out = Json::array();
  for (exactla::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

Json signature(const exactla::SignatureTriple& s) {
  return Json{{"positives", integer(static_cast<long long>(s.positives))},
              {"zeros", integer(static_cast<long long>(s.zeros))},
              {"negatives", integer(static_cast<long long>(s.negatives))}};
}

Json disk(const exactla::GershgorinDisk& d) {
  return Json{{"center", integer(d.center)}, {"radius", integer(d.radius)}};
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"label", c.label}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  return Json{{"command", r.command}, {"version", kVersion}, {"inputs", r.inputs}, {"results", r.results},
              {"checks", std::move(checks)}, {"passed", r.passed()}};
}

namespace {

bool is_matrix(const Json& v) {
  return v.is_object() && v.size() == 3 && v.contains("rows") && v.contains("cols") && v.contains("entries");
}

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "none";
  return v.dump();
}

bool all_scalar(const Json& v) {
  return std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
}

void render(std::ostream& os, const std::string& key, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_matrix(v)) {
    const auto rows = std::stoul(v["rows"].get<std::string>());
    const auto cols = std::stoul(v["cols"].get<std::string>());
    os << pad << key << ": " << rows << "x" << cols << (rows * cols == 0 ? " (empty)" : "") << '\n';
    std::size_t width = 1;
    for (const auto& e : v["entries"]) width = std::max(width, e.get<std::string>().size());
    for (std::size_t i = 0; i < rows; ++i) {
      os << pad << "  [";
      for (std::size_t j = 0; j < cols; ++j) {
        const auto s = v["entries"][i * cols + j].get<std::string>();
        os << (j ? " " : "") << std::string(width - s.size(), ' ') << s;
      }
      os << "]\n";
    }
  } else if (v.is_object()) {
    if (v.empty()) {
      os << pad << key << ": {}\n";
      return;
    }
    os << pad << key << ":\n";
    for (const auto& [k, child] : v.items()) render(os, k, child, indent + 2);
  } else if (v.is_array() && all_scalar(v)) {
    os << pad << key << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
    os << "]\n";
  } else if (v.is_array()) {
    os << pad << key << ":\n";
    for (std::size_t i = 0; i < v.size(); ++i) render(os, "[" + std::to_string(i + 1) + "]", v[i], indent + 2);
  } else {
    os << pad << key << ": " << scalar(v) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream os;
  os << "command: " << scalar(doc.value("command", Json())) << '\n';
  os << "version: " << scalar(doc.value("version", Json())) << '\n';
  for (const char* section : {"inputs", "results"})
    if (doc.contains(section)) render(os, section, doc[section], 0);

  std::size_t failed = 0;
  const Json checks = doc.value("checks", Json::array());
  if (!checks.empty()) {
    os << "checks:\n";
    for (const auto& c : checks) {
      const bool pass = c.value("pass", false);
      if (!pass) ++failed;
      os << "  [" << (pass ? "pass" : "FAIL") << "] " << scalar(c.value("label", Json())) << ": expected "
         << scalar(c.value("expected", Json())) << ", actual " << scalar(c.value("actual", Json())) << '\n';
    }
  }
  os << "status: ";
  if (failed == 0)
    os << "ok (" << checks.size() << " checks)\n";
  else
    os << "FAILED (" << failed << " of " << checks.size() << " checks)\n";
  return os.str();
}

}  // namespace seifert::cli
