#include "cuckooseg/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

#include "cuckooseg/error.hpp"

namespace cuckooseg {

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) noexcept {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const std::uint8_t b : bytes) {
    hash ^= b;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

InputInfo describe_input(const GrayImage& image) {
  return InputInfo{image.width(), image.height(), fnv1a64(image.pixels())};
}

std::string format_exact(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string format_shortest(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

namespace {

template <typename T>
std::string join(std::span<const T> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::InvalidArgs, "malformed report: " + what);
}

double parse_real(const std::string& text, const std::string& key) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) malformed("bad number for " + key);
  return v;
}

std::uint64_t parse_u64(const std::string& text, const std::string& key, int base = 10) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, base);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    malformed("bad integer for " + key);
  }
  return v;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& key) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(static_cast<int>(parse_u64(item, key)));
  return out;
}

}  // namespace

std::string format_summary_line(const ThresholdSet& thresholds, const QualityReport& quality) {
  return "levels=" + std::to_string(thresholds.levels()) +
         " rho=" + format_shortest(quality.correlation) + " mse=" + format_shortest(quality.mse) +
         " psnr=" + format_shortest(quality.psnr) + " thresholds=[" + join(thresholds.values()) + "]";
}

std::string write_trace_csv(std::span<const double> trace) {
  std::string out = "generation,best_fitness\n";
  for (std::size_t g = 0; g < trace.size(); ++g) {
    out += std::to_string(g + 1) + "," + format_exact(trace[g]) + "\n";
  }
  return out;
}

std::string write_report(const SearchReport& report, const QualityReport& quality,
                         const InputInfo& input) {
  const SearchParams& p = report.params;
  std::string out;
  auto kv = [&out](std::string_view key, const std::string& value) {
    out.append(key).append("=").append(value).append("\n");
  };
  kv("schema_version", std::to_string(kReportSchemaVersion));
  kv("levels", std::to_string(report.best.thresholds.levels()));
  kv("classes", std::to_string(report.best.class_map.classes()));
  kv("thresholds", join(report.best.thresholds.values()));
  kv("representatives", join(std::span<const int>(report.best.class_map.representatives)));
  kv("correlation", format_exact(quality.correlation));
  kv("mse", format_exact(quality.mse));
  kv("psnr", format_exact(quality.psnr));
  kv("seed", std::to_string(p.seed));
  kv("nests", std::to_string(p.nests));
  kv("generations", std::to_string(p.generations));
  kv("pa", format_exact(p.pa));
  kv("alpha", format_exact(p.levy.alpha));
  kv("beta", format_exact(p.levy.beta));
  kv("evaluations", std::to_string(report.evaluations));
  kv("input_width", std::to_string(input.width));
  kv("input_height", std::to_string(input.height));
  kv("input_fnv1a64", hex16(input.fnv1a64));
  out += "[trace]\n";
  out += write_trace_csv(report.trace);
  return out;
}

ParsedReport parse_report(std::string_view text) {
  std::map<std::string, std::string> fields;
  std::vector<double> trace;
  std::istringstream in{std::string(text)};
  std::string line;
  bool in_trace = false;
  bool saw_csv_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line == "[trace]") {
      in_trace = true;
      continue;
    }
    if (in_trace) {
      if (!saw_csv_header) {
        if (line != "generation,best_fitness") malformed("missing trace header");
        saw_csv_header = true;
        continue;
      }
      const auto comma = line.find(',');
      if (comma == std::string::npos) malformed("bad trace row");
      const auto gen = parse_u64(line.substr(0, comma), "generation");
      if (gen != trace.size() + 1) malformed("trace rows out of order");
      trace.push_back(parse_real(line.substr(comma + 1), "best_fitness"));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) malformed("expected key=value, got '" + line + "'");
    fields[line.substr(0, eq)] = line.substr(eq + 1);
  }

  auto field = [&](const std::string& key) -> const std::string& {
    const auto it = fields.find(key);
    if (it == fields.end()) malformed("missing " + key);
    return it->second;
  };

  ParsedReport r;
  r.schema_version = static_cast<int>(parse_u64(field("schema_version"), "schema_version"));
  if (r.schema_version != kReportSchemaVersion) {
    malformed("unsupported schema_version " + std::to_string(r.schema_version));
  }
  r.levels = parse_u64(field("levels"), "levels");
  r.thresholds = parse_int_list(field("thresholds"), "thresholds");
  r.representatives = parse_int_list(field("representatives"), "representatives");
  r.correlation = parse_real(field("correlation"), "correlation");
  r.mse = parse_real(field("mse"), "mse");
  r.psnr = parse_real(field("psnr"), "psnr");
  r.params.levels = r.levels;
  r.params.seed = parse_u64(field("seed"), "seed");
  r.params.nests = parse_u64(field("nests"), "nests");
  r.params.generations = parse_u64(field("generations"), "generations");
  r.params.pa = parse_real(field("pa"), "pa");
  r.params.levy.alpha = parse_real(field("alpha"), "alpha");
  r.params.levy.beta = parse_real(field("beta"), "beta");
  r.evaluations = parse_u64(field("evaluations"), "evaluations");
  r.input.width = parse_u64(field("input_width"), "input_width");
  r.input.height = parse_u64(field("input_height"), "input_height");
  r.input.fnv1a64 = parse_u64(field("input_fnv1a64"), "input_fnv1a64", 16);
  r.trace = std::move(trace);
  if (r.thresholds.size() != r.levels) malformed("levels disagrees with thresholds");
  return r;
}

}  // namespace cuckooseg
