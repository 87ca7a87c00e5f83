#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fuzzpart/axis.hpp"
#include "fuzzpart/tensor.hpp"

namespace fuzzpart {

/// A row-major N x d matrix of sample points in data units.
struct Dataset {
  std::size_t width = 0;
  std::vector<double> values;         // rows() * width entries
  std::vector<std::string> columns;   // optional names

  std::size_t rows() const { return width == 0 ? 0 : values.size() / width; }
  std::span<const double> row(std::size_t i) const {
    return {values.data() + i * width, width};
  }

  /// Throws Error if any entry is non-finite or the size is not a
  /// multiple of the width.
  void validate() const;
};

/// Compensated (Neumaier) accumulator; keeps per-set mass sums exact
/// enough that chunked accumulation merges match single-pass results
/// to the last ulp.
struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v);
  void merge(const Accumulator& other);
  double value() const { return sum + comp; }
};

/// Per-fuzzy-set membership mass accumulated over a dataset. Only sets
/// with nonzero mass are stored; the universe has prod(p_j) of them.
struct FuzzyHistogram {
  TensorPartition partition;
  std::map<std::vector<int>, Accumulator> cells;
  std::size_t dropped = 0;       // points outside the universe
  std::size_t total_points = 0;

  std::size_t effective_points() const { return total_points - dropped; }
  double total_mass() const;
  double mass_of(const FuzzySetId& id) const;

  /// Adds another histogram over the same partition (per-set mass
  /// addition). Throws DimensionMismatch on incompatible partitions.
  void merge(const FuzzyHistogram& other);
};

/// Classical counting histogram over the same axes, half-open bins.
struct CrispHistogram {
  std::vector<Axis> axes;
  std::map<std::vector<int>, std::uint64_t> counts;
  std::size_t dropped = 0;
  std::size_t total_points = 0;

  std::size_t effective_points() const { return total_points - dropped; }
  void merge(const CrispHistogram& other);
};

/// Distributes each in-universe point's membership over the 2^d corner
/// sets of its bin; out-of-universe points are dropped and counted,
/// never clamped. Total mass equals the number of kept points.
FuzzyHistogram accumulate_fuzzy(const TensorPartition& tp, const Dataset& data);

CrispHistogram accumulate_crisp(const std::vector<Axis>& axes,
                                const Dataset& data);

/// Density at x: fuzzy - sum of mass_A * mu_A(x) over the corner sets
/// of x's bin, crisp - the bin count; both divided by
/// (kept points) * prod(spacing). Throws OutOfUniverse, EmptyHistogram.
double density_estimate(const FuzzyHistogram& h, std::span<const double> x);
double density_estimate(const CrispHistogram& h, std::span<const double> x);

enum class EstimatorKind { Crisp, Fuzzy };

struct ShiftRow {
  double shift = 0.0;  // fraction of one spacing
  double l1 = 0.0;     // mean |shifted - unshifted| over the grid
};

/// Rebuilds the partition with all origins shifted by shift * spacing
/// and reports the mean absolute change of the density estimate over a
/// fixed evaluation grid (midpoints of [origin + spacing, upper] per
/// axis, which lies inside every shifted universe for shifts in [0,1)).
std::vector<ShiftRow> shift_sensitivity(EstimatorKind kind,
                                        const Dataset& data,
                                        const std::vector<Axis>& axes,
                                        const std::vector<NormalizedMF>& mfs,
                                        std::span<const double> shifts,
                                        int eval_points_per_axis = 64);

}  // namespace fuzzpart
