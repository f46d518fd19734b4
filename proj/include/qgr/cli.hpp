#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitBudget = 3;

/// Runs one subcommand. args excludes the program name. The report goes to
/// out and ends with an input digest line; errors go to err prefixed with
/// "error:".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

}  // namespace qgr::cli
