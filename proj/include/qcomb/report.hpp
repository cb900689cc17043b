#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "qcomb/errors.hpp"

namespace qcomb {

/// Keyed table of numeric results, e.g. exact values per lattice point.
using NumericTable = std::vector<std::pair<std::string, double>>;

struct ErrorStats {
  std::size_t count = 0;
  double max_abs_error = 0.0;
  double mean_abs_error = 0.0;
  double max_rel_error = 0.0;   // over keys with exact != 0
  double mean_rel_error = 0.0;
};

/// Error statistics of an approximate table against an exact one. The key
/// sets must coincide; throws DomainError otherwise.
ErrorStats compare_report(const NumericTable& exact, const NumericTable& approx);

std::string error_stats_json(const ErrorStats& stats);

/// Deterministic shortest round-trip formatting ("%.17g").
std::string format_double(double v);

/// Writes via a temp file plus rename, so readers never see partial output.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace qcomb
