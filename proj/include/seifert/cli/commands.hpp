#ifndef SEIFERT_CLI_COMMANDS_HPP
#define SEIFERT_CLI_COMMANDS_HPP

#include <iosfwd>
#include <optional>

#include "seifert/bands/word.hpp"
#include "seifert/cli/report.hpp"
#include "seifert/legendrian/front.hpp"

namespace seifert::cli {

/// Exit codes.
enum Exit : int { kSuccess = 0, kFailedCheck = 1, kUsage = 2 };

/// Precondition violations raise std::invalid_argument (exit 2).
Report cmd_family(int n);
Report cmd_certify(int m, int n);
Report cmd_surface(const bands::BandWord& w);
Report cmd_front(const legendrian::FrontDiagram& f, std::optional<int> family_n = std::nullopt);
/// Signatures are cross-checked for n <= spectral_max only.
Report cmd_verify(int N, int spectral_max);

/// Whole command line, minus process plumbing.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seifert::cli

#endif  // SEIFERT_CLI_COMMANDS_HPP
