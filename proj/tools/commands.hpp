#pragma once

#include <string>

#include "json_io.hpp"

namespace pommiez::cli {

/// Builds a context from the command-line forms:
///   omega: "plane" | "disk:R"      (R a positive rational)
///   q:     factored polynomial over z with q(0) = 1, e.g. "(1-z)^2*(1-z/2)"
///   unit:  "generic" | "exp:c:N" | "geom:c:N"
ContextPtr context_from_flags(const std::string& omega, const std::string& q,
                              const std::string& unit);

/// Entry point of the command-line tool. Exit codes: 0 success, 1 domain
/// error (JSON {"error": ...} on stdout), 2 usage error.
int run(int argc, const char* const* argv);

}  // namespace pommiez::cli
