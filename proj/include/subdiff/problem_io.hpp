#pragma once

#include <filesystem>
#include <string>

#include "subdiff/spectral_solver.hpp"

namespace subdiff {

/// Parse a problem document:
///   { "alpha": a, "T": t, "n_time": n, "L": l, "M": m,
///     "g_coeffs": [..M..],
///     "forcing": "zero" | {"constant": c} | {"samples": [[..n+1..] x M]} }
/// Throws std::invalid_argument on malformed or inconsistent input.
ProblemSpec parse_problem(const std::string& json_text);

/// Load a problem document from disk.
ProblemSpec load_problem(const std::filesystem::path& path);

}  // namespace subdiff
