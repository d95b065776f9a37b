#pragma once

// Named verification suites over parameter grids. A grid is a set of
// inclusive integer ranges, one per parameter the suite uses; points are the
// cartesian product in the suite's declared parameter order, filtered by the
// suite's relational constraint (S < R, 2S <= R). Points are evaluated on an
// OpenMP worker pool and merged back in grid order.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qtrunc/report.hpp"

namespace qtrunc {

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// Parses "7" or "2..8". Throws ParameterError on malformed text or lo > hi.
IntRange parse_range(const std::string& text);

using GridPoint = std::map<std::string, std::int64_t>;

struct SuiteSpec {
  std::string suite;
  /// Overrides of the suite's default ranges, keyed by R, S, k, m, n, N.
  std::map<std::string, IntRange> grid;
};

/// Plain table of exact values; every cell is a decimal string.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct SuiteRun {
  std::string suite;
  std::vector<CheckReport> reports;  ///< grid order
  bool pass() const;
};

/// Canonical suite names, in a fixed order.
std::vector<std::string> suite_names();
/// Maps aliases ("mk") to canonical names; throws ParameterError if unknown.
std::string canonical_suite(const std::string& name);

/// Expands the grid after validating every range against the suite's domain.
/// Throws ParameterError on unknown parameters, out-of-domain values, or an
/// empty grid.
std::vector<GridPoint> expand_grid(const SuiteSpec& spec);

/// Runs every grid point. Worker count comes from QTRUNC_WORKERS when set,
/// otherwise from OpenMP defaults.
SuiteRun run_suite(const SuiteSpec& spec);
/// Coefficient / count table for every grid point, without pass/fail gating.
Table table_suite(const SuiteSpec& spec);

}  // namespace qtrunc
