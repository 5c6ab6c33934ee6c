#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace netclosure::cli {

enum ExitCode : int { kOk = 0, kFindings = 1, kUsage = 2, kSizeGuard = 3 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Indented plain-text rendering of a report document. Carries exactly the
/// keys and values of the JSON form.
std::string render_text(const nlohmann::ordered_json& doc);

}  // namespace netclosure::cli
