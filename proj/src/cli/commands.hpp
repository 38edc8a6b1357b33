#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "torusquake/torusquake.hpp"

namespace torusquake::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kHorizonError = 2 };

/// Parses "chart:c1,c2[,c3]" (or bare trace coordinates) into a trace-coordinate point.
TracePoint parse_start(const std::string& text, int orient = 1);

/// Entry point shared by the executable and tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torusquake::cli
