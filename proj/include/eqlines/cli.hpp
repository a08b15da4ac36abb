#pragma once

// Command-line front end. Exit codes: 0 success, 1 usage or input error,
// 2 infeasible input or a mismatch against the pinned tables.

#include <iosfwd>
#include <string>
#include <vector>

namespace eqlines::cli {

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes via a temporary file in the same directory and renames it.
void write_atomic(const std::string& path, const std::string& content);

/// Line diff of two TSV texts as JSON: {"match", "expected_lines",
/// "actual_lines", "mismatches": [{"line", "expected", "actual"}]}.
std::string tsv_diff_json(const std::string& expected, const std::string& actual);

}  // namespace eqlines::cli
