#pragma once

#include <compare>
#include <span>
#include <vector>

#include "fuzzpart/axis.hpp"
#include "fuzzpart/normalized_mf.hpp"

namespace fuzzpart {

/// Names one fuzzy set of a d-dimensional partition by the 1-based
/// node indices of its core.
struct FuzzySetId {
  std::vector<int> ix;

  int dim() const { return static_cast<int>(ix.size()); }
  friend bool operator==(const FuzzySetId&, const FuzzySetId&) = default;
  friend auto operator<=>(const FuzzySetId&, const FuzzySetId&) = default;
};

/// The half-open box between adjacent nodes in every dimension,
/// identified by its lower-corner node indices.
struct Bin {
  std::vector<int> lower;

  /// All 2^d corner fuzzy sets, in lexicographic order (last axis
  /// fastest).
  std::vector<FuzzySetId> corners() const;
};

/// A d-dimensional strong-uniform fuzzy partition built from one
/// normalized membership function per axis. The centralized membership
/// is the product of the per-axis shapes evaluated at offset/spacing;
/// every fuzzy set is the translate of that shape to its core node.
///
/// Fuzzy sets are identified by index and evaluated lazily; nothing is
/// materialized per set. Immutable after construction.
class TensorPartition {
 public:
  /// Validates axes and membership functions (throws DimensionMismatch,
  /// InvalidAxis, InvalidMF).
  TensorPartition(std::vector<Axis> axes, std::vector<NormalizedMF> mfs);

  int dim() const { return static_cast<int>(axes_.size()); }
  const std::vector<Axis>& axes() const { return axes_; }
  const std::vector<NormalizedMF>& mfs() const { return mfs_; }

  /// Centralized membership: product over axes of eta_j(offset_j / c_j);
  /// zero whenever any |offset_j| >= c_j.
  double centralized(std::span<const double> offset) const;

  /// Membership of the fuzzy set id at x: centralized(x - core) inside
  /// the universe, 0 outside.
  double membership(const FuzzySetId& id, std::span<const double> x) const;

  /// The core node of a fuzzy set.
  std::vector<double> core_of(const FuzzySetId& id) const;

  bool in_universe(std::span<const double> x) const;

  /// The bin containing x; throws OutOfUniverse.
  Bin locate_bin(std::span<const double> x) const;

  /// Sum of the 2^d corner memberships of the bin containing x;
  /// mathematically 1 for every x in the universe.
  double corner_sum(std::span<const double> x) const;

 private:
  void check_dim(std::size_t got, const char* what) const;
  void check_id(const FuzzySetId& id) const;

  std::vector<Axis> axes_;
  std::vector<NormalizedMF> mfs_;
};

/// Free-function form of the constructor: arbitrary per-axis normalized
/// membership functions over equally spaced nodes.
inline TensorPartition build_tensor(std::vector<Axis> axes,
                                    std::vector<NormalizedMF> mfs) {
  return TensorPartition(std::move(axes), std::move(mfs));
}

}  // namespace fuzzpart
