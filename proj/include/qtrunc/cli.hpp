#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qtrunc/suites.hpp"

namespace qtrunc::cli {

enum class Format { Text, Json, Csv };

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

Format parse_format(const std::string& text);

void write_run(const SuiteRun& run, Format format, std::ostream& out);
void write_table(const Table& table, Format format, std::ostream& out);

/// Entry point behind the `qtrunc` binary. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtrunc::cli
