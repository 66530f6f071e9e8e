#ifndef SEIFERT_CLI_REPORT_HPP
#define SEIFERT_CLI_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "seifert/exactla/types.hpp"
#include "seifert/family/family.hpp"

namespace seifert::cli {

using Json = nlohmann::ordered_json;
using family::Check;

inline constexpr const char* kVersion = "0.1.0";

/// Result of one command. Integers are carried as decimal strings so no
/// consumer loses precision.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<Check> checks;

  bool passed() const;
  void check(std::string label, std::string expected, std::string actual);
};

Json to_json(const Report& r);

/// Plain-text rendering of a report document. The CLI's text output is
/// exactly render_text(to_json(report)).
std::string render_text(const Json& doc);

Json integer(const exactla::BigInt& x);
Json integer(long long x);
/// {"rows", "cols", "entries"} with row-major decimal strings.
Json matrix(const exactla::IntMatrix& m);
Json vector(const exactla::IntVector& v);
Json signature(const exactla::SignatureTriple& s);
Json disk(const exactla::GershgorinDisk& d);

}  // namespace seifert::cli

#endif  // SEIFERT_CLI_REPORT_HPP
