#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuzzpart/histogram.hpp"
#include "fuzzpart/tensor.hpp"
#include "fuzzpart/verifier.hpp"

namespace fuzzpart::cli {

class ConfigError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class CsvError : public Error {
 public:
  CsvError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct AxisSpec {
  double origin = 0.0;
  double spacing = 1.0;
  int count = 3;
  std::string mf = "triangular";  // built-in name or DSL expression

  friend bool operator==(const AxisSpec&, const AxisSpec&) = default;
};

/// A fully resolved run configuration; every list has exactly dim
/// entries and every DSL spec compiles.
struct RunConfig {
  int dim = 0;
  std::vector<AxisSpec> axes;
  bool variant = false;  // the built-in non-tensor shape (2-D)
  double tolerance = 1e-9;
  std::uint64_t seed = 42;
  int samples_per_axis = 33;
  int random_points = 1000;
  int resolution = 101;
  char panel = 'A';
  std::vector<double> shifts;
  bool skip_bad = false;
  std::string out;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Raw option lists as read from a config file or command line, before
/// per-axis resolution. Per-axis keys repeat, one occurrence per axis;
/// a single occurrence broadcasts to every axis.
struct ConfigInput {
  std::optional<int> dim;
  std::vector<double> origins;
  std::vector<double> spacings;
  std::vector<int> counts;
  std::vector<std::string> mfs;
  std::optional<std::string> variant;
  std::optional<double> tolerance;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples_per_axis;
  std::optional<int> random_points;
  std::optional<int> resolution;
  std::optional<std::string> panel;
  std::vector<double> shifts;
  std::optional<bool> skip_bad;
  std::optional<std::string> out;
};

ConfigInput parse_config_text(std::string_view text);
ConfigInput load_config_file(const std::string& path);

/// Applies non-empty fields of `over` on top of `base` (command line
/// over config file; per-axis lists replace wholesale).
void overlay(ConfigInput& base, const ConfigInput& over);

/// Broadcasts per-axis lists, fills defaults, validates. Throws
/// ConfigError on inconsistent lengths or an uninferable dimension.
RunConfig resolve(const ConfigInput& in);

/// Canonical flat text form; parsing and resolving it reproduces the
/// configuration exactly.
std::string canonical_config(const RunConfig& cfg);

/// The partition a configuration denotes: a tensor partition, or the
/// built-in non-tensor variant over the same axes. Both expose the same
/// centralized-membership and per-set evaluation surface.
struct PartitionHandle {
  std::vector<Axis> axes;
  bool is_variant = false;
  std::optional<TensorPartition> tensor;

  int dim() const { return static_cast<int>(axes.size()); }
  CentralizedMembership centralized() const;
  double set_membership(std::span<const int> node_ix,
                        std::span<const double> x) const;
  double corner_sum_at(std::span<const double> x) const;
};

PartitionHandle build_partition(const RunConfig& cfg);

struct CsvResult {
  Dataset data;
  std::size_t bad_rows = 0;
};

/// Comma-separated numeric rows, decimal point only; a non-numeric
/// first row is taken as the header. Malformed rows throw CsvError with
/// the 1-based line number, or are skipped and counted when skip_bad.
CsvResult read_csv(std::istream& in, bool skip_bad);
CsvResult read_csv_file(const std::string& path, bool skip_bad);

struct GridExport {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::vector<double>> axis_samples;
  std::vector<double> values;  // row-major, last axis fastest
};

/// Panel A samples the centralized membership over one support box;
/// panel B samples the 4-corner sum over the first bin. Both require
/// d = 2 (UnsupportedDimension otherwise).
GridExport make_grid(const PartitionHandle& p, char panel, int resolution);

void write_grid_csv(const GridExport& g, std::ostream& out);
void write_fuzzy_csv(const FuzzyHistogram& h, const RunConfig& cfg,
                     std::ostream& out);
void write_crisp_csv(const CrispHistogram& h, const RunConfig& cfg,
                     std::ostream& out);

/// Full command dispatch (eval, verify, grid, hist, compare). Returns
/// the process exit code: 0 success, 1 verification condition failure,
/// 2 configuration or input error.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace fuzzpart::cli
