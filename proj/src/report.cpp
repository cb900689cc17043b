#include "qcomb/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qcomb {

ErrorStats compare_report(const NumericTable& exact, const NumericTable& approx) {
  if (exact.size() != approx.size())
    throw DomainError("compare_report: tables differ in size");
  NumericTable a = exact, b = approx;
  auto by_key = [](const auto& x, const auto& y) { return x.first < y.first; };
  std::sort(a.begin(), a.end(), by_key);
  std::sort(b.begin(), b.end(), by_key);

  ErrorStats stats;
  stats.count = a.size();
  double abs_sum = 0.0, rel_sum = 0.0;
  std::size_t rel_count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].first != b[i].first)
      throw DomainError("compare_report: key mismatch at '" + a[i].first + "'");
    double abs_err = std::abs(a[i].second - b[i].second);
    stats.max_abs_error = std::max(stats.max_abs_error, abs_err);
    abs_sum += abs_err;
    if (a[i].second != 0.0) {
      double rel = abs_err / std::abs(a[i].second);
      stats.max_rel_error = std::max(stats.max_rel_error, rel);
      rel_sum += rel;
      ++rel_count;
    }
  }
  if (stats.count) stats.mean_abs_error = abs_sum / static_cast<double>(stats.count);
  if (rel_count) stats.mean_rel_error = rel_sum / static_cast<double>(rel_count);
  return stats;
}

std::string error_stats_json(const ErrorStats& s) {
  std::ostringstream out;
  out << "{\"count\": " << s.count
      << ", \"max_abs_error\": " << format_double(s.max_abs_error)
      << ", \"mean_abs_error\": " << format_double(s.mean_abs_error)
      << ", \"max_rel_error\": " << format_double(s.max_rel_error)
      << ", \"mean_rel_error\": " << format_double(s.mean_rel_error) << "}";
  return out.str();
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string());
    out << content;
    if (!out.good()) throw Error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace qcomb
