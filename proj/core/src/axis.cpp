#include "fuzzpart/axis.hpp"

#include <cmath>
#include <sstream>

namespace fuzzpart {

void Axis::validate() const {
  if (!(spacing > 0.0) || !std::isfinite(spacing) || !std::isfinite(origin)) {
    throw InvalidAxis("axis spacing must be positive and finite");
  }
  if (count < 3) {
    std::ostringstream os;
    os << "axis needs at least 3 nodes, got " << count;
    throw InvalidAxis(os.str());
  }
}

bool in_universe(std::span<const Axis> axes, std::span<const double> x) {
  if (x.size() != axes.size()) {
    throw DimensionMismatch("point dimension does not match axes");
  }
  for (std::size_t j = 0; j < axes.size(); ++j) {
    if (!axes[j].contains(x[j])) return false;
  }
  return true;
}

std::vector<int> locate_bin_indices(std::span<const Axis> axes,
                                    std::span<const double> x) {
  if (!in_universe(axes, x)) {
    throw OutOfUniverse("point outside the universe");
  }
  std::vector<int> lower(axes.size());
  for (std::size_t j = 0; j < axes.size(); ++j) {
    const Axis& a = axes[j];
    int i = 1 + static_cast<int>(std::floor((x[j] - a.origin) / a.spacing));
    if (i > a.count - 1) i = a.count - 1;  // closed upper face
    if (i < 1) i = 1;
    lower[j] = i;
  }
  return lower;
}

}  // namespace fuzzpart
