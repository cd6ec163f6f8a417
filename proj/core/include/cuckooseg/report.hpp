#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cuckooseg/cuckoo_search.hpp"
#include "cuckooseg/gray_image.hpp"
#include "cuckooseg/quality.hpp"

namespace cuckooseg {

inline constexpr int kReportSchemaVersion = 1;

/// Identifies the input a run was made on.
struct InputInfo {
  std::size_t width = 0;
  std::size_t height = 0;
  std::uint64_t fnv1a64 = 0;  // over the row-major pixel bytes
};

InputInfo describe_input(const GrayImage& image);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) noexcept;

/// 17 significant digits ("%.17g"), "inf"/"-inf"/"nan" for non-finite values.
/// Parsing the text back with strtod recovers the double exactly.
std::string format_exact(double value);

/// Shortest text that round-trips to the same double (std::to_chars).
std::string format_shortest(double value);

/// One-line run summary:
///   levels=<x> rho=<r> mse=<m> psnr=<p> thresholds=[t1,...,tx]
/// with reals in format_shortest form and psnr "inf" at zero MSE.
std::string format_summary_line(const ThresholdSet& thresholds, const QualityReport& quality);

/// Report document, schema version 1. Line-oriented "key=value" pairs in a
/// fixed order, then a "[trace]" section holding a CSV block:
///
///   schema_version=1
///   levels, classes, thresholds (comma list), representatives (comma list),
///   correlation, mse, psnr, seed, nests, generations, pa, alpha, beta,
///   evaluations, input_width, input_height, input_fnv1a64 (16 hex digits)
///   [trace]
///   generation,best_fitness
///   1,<fitness>
///   ...
///
/// Reals use format_exact; psnr is "inf" at zero MSE.
std::string write_report(const SearchReport& report, const QualityReport& quality,
                         const InputInfo& input = {});

/// The per-generation trace alone: header line plus one row per generation.
std::string write_trace_csv(std::span<const double> trace);

/// What parse_report recovers from a report document.
struct ParsedReport {
  int schema_version = 0;
  std::size_t levels = 0;
  std::vector<int> thresholds;
  std::vector<int> representatives;
  double correlation = 0.0;
  double mse = 0.0;
  double psnr = 0.0;
  SearchParams params;
  std::uint64_t evaluations = 0;
  InputInfo input;
  std::vector<double> trace;
};

/// Throws InvalidArgs on a malformed or unknown-version document.
ParsedReport parse_report(std::string_view text);

}  // namespace cuckooseg
