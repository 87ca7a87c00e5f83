#pragma once

#include <span>
#include <vector>

#include "fuzzpart/errors.hpp"

namespace fuzzpart {

/// One dimension's equally spaced node set: node(i) = origin + (i-1) * spacing
/// for i in 1..count. Indices are 1-based throughout the library.
struct Axis {
  double origin = 0.0;
  double spacing = 1.0;
  int count = 3;

  double node(int i) const { return origin + (i - 1) * spacing; }
  double upper() const { return node(count); }
  bool contains(double x) const { return x >= origin && x <= upper(); }

  /// Throws InvalidAxis unless spacing > 0 and count >= 3.
  void validate() const;
};

/// Lower-corner (1-based) indices of the half-open bin containing x,
/// with the upper face of the universe mapped to the last bin.
/// Throws OutOfUniverse / DimensionMismatch.
std::vector<int> locate_bin_indices(std::span<const Axis> axes,
                                    std::span<const double> x);

bool in_universe(std::span<const Axis> axes, std::span<const double> x);

}  // namespace fuzzpart
