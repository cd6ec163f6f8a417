#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <random>
#include <string>

#include "cuckooseg/cuckoo_search.hpp"
#include "cuckooseg/error.hpp"
#include "cuckooseg/exhaustive.hpp"
#include "cuckooseg/pgm_io.hpp"
#include "cuckooseg/quality.hpp"
#include "cuckooseg/report.hpp"
#include "cuckooseg/thresholding.hpp"

namespace cuckooseg::cli {

namespace {

struct SegmentArgs {
  std::string input;
  std::size_t levels = 0;
  SearchParams params;
  std::string seed = "0";
  std::string output;
  std::string report;
  std::string trace_csv;
  bool ascii = false;
};

struct OracleArgs {
  std::string input;
  std::size_t levels = 0;
  std::uint64_t max_combinations = 10'000'000;
  unsigned threads = 1;
  bool unrestricted = false;
};

struct MetricsArgs {
  std::string original;
  std::string segmented;
};

std::uint64_t resolve_seed(const std::string& text) {
  if (text == "random") {
    std::random_device rd;
    return (std::uint64_t{rd()} << 32) ^ std::uint64_t{rd()};
  }
  std::uint64_t seed = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidParams, "--seed expects an unsigned 64-bit integer or 'random'");
  }
  return seed;
}

int cmd_segment(const SegmentArgs& args, std::ostream& out) {
  const GrayImage image = read_pgm_file(args.input);
  const Histogram hist = histogram(image);

  SearchParams params = args.params;
  params.levels = args.levels;
  params.seed = resolve_seed(args.seed);
  const SearchReport report = search(hist, params);

  const GrayImage segmented = apply(image, report.best.class_map);
  QualityReport quality;
  quality.correlation = report.best.fitness;
  quality.mse = mse(image, segmented);
  quality.psnr = psnr(quality.mse);

  if (!args.output.empty()) {
    write_pgm_file(args.output, segmented, args.ascii ? PgmFormat::Ascii : PgmFormat::Binary);
  }
  if (!args.report.empty()) {
    write_file(args.report, write_report(report, quality, describe_input(image)));
  }
  if (!args.trace_csv.empty()) write_file(args.trace_csv, write_trace_csv(report.trace));

  out << format_summary_line(report.best.thresholds, quality) << '\n';
  return kExitOk;
}

int cmd_oracle(const OracleArgs& args, std::ostream& out) {
  const GrayImage image = read_pgm_file(args.input);
  const OracleOptions options{
      .max_combinations = args.max_combinations,
      .mode = args.unrestricted ? Enumeration::Unrestricted : Enumeration::Restricted,
      .threads = args.threads,
  };
  const OracleResult result = exhaustive_best(histogram(image), args.levels, options);

  const GrayImage segmented = apply(image, result.best.class_map);
  QualityReport quality;
  quality.correlation = result.best.fitness;
  quality.mse = mse(image, segmented);
  quality.psnr = psnr(quality.mse);

  out << format_summary_line(result.best.thresholds, quality) << '\n';
  out << "enumerated=" << result.enumerated << '\n';
  return kExitOk;
}

int cmd_metrics(const MetricsArgs& args, std::ostream& out, std::ostream& err) {
  const GrayImage original = read_pgm_file(args.original);
  const GrayImage segmented = read_pgm_file(args.segmented);
  // MSE and PSNR are defined for every same-shape pair; correlation is not.
  const double error = mse(original, segmented);
  std::string rho = "nan";
  int status = kExitOk;
  try {
    rho = format_shortest(correlation(original, segmented));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateImage) throw;
    err << "error: " << e.what() << '\n';
    status = kExitFailure;
  }
  out << "rho=" << rho << " mse=" << format_shortest(error)
      << " psnr=" << format_shortest(psnr(error)) << '\n';
  return status;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multilevel gray-image thresholding by cuckoo search"};
  app.require_subcommand(1);

  SegmentArgs seg;
  auto* segment = app.add_subcommand("segment", "Search thresholds and write the segmented image");
  segment->add_option("--input", seg.input, "Input PGM (P2/P5, maxval 255)")->required();
  segment
      ->add_option("--levels", seg.levels,
                   "Number of thresholds x; the image is split into x+1 classes")
      ->required()
      ->check(CLI::Range(1, 255));
  segment->add_option("--nests", seg.params.nests, "Population size")->capture_default_str();
  segment->add_option("--generations", seg.params.generations, "Generation count")
      ->capture_default_str();
  segment->add_option("--pa", seg.params.pa, "Fraction of worst nests abandoned per generation")
      ->capture_default_str();
  segment->add_option("--beta", seg.params.levy.beta, "Lévy stability index in (0,2)")
      ->capture_default_str();
  segment->add_option("--alpha", seg.params.levy.alpha, "Lévy step scale")->capture_default_str();
  segment->add_option("--seed", seg.seed, "RNG seed, or 'random'")->capture_default_str();
  segment->add_option("--output", seg.output, "Segmented image path (PGM)");
  segment->add_option("--report", seg.report, "Run report path");
  segment->add_option("--trace-csv", seg.trace_csv, "Per-generation best fitness as CSV");
  segment->add_flag("--ascii", seg.ascii, "Write the segmented image as P2 instead of P5");

  OracleArgs orc;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum for small level counts");
  oracle->add_option("--input", orc.input, "Input PGM (P2/P5, maxval 255)")->required();
  oracle->add_option("--levels", orc.levels, "Number of thresholds x")
      ->required()
      ->check(CLI::Range(1, 255));
  oracle->add_option("--max-combinations", orc.max_combinations,
                     "Refuse to run when C(255, x) exceeds this")
      ->capture_default_str();
  oracle->add_option("--threads", orc.threads, "Worker threads")->capture_default_str();
  oracle->add_flag("--unrestricted", orc.unrestricted,
                   "Enumerate every threshold tuple instead of one per distinct partition");

  MetricsArgs met;
  auto* metrics = app.add_subcommand("metrics", "Correlation, MSE and PSNR of an image pair");
  metrics->add_option("--original", met.original, "Original PGM")->required();
  metrics->add_option("--segmented", met.segmented, "Segmented PGM")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (*segment) return cmd_segment(seg, out);
    if (*oracle) return cmd_oracle(orc, out);
    return cmd_metrics(met, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::DegenerateImage) return kExitDegenerate;
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace cuckooseg::cli
