#include "fuzzpart/variants.hpp"

#include <algorithm>
#include <cmath>

#include "fuzzpart/errors.hpp"

namespace fuzzpart {

double variant_f1(double x, double y) {
  return std::max(0.0, std::min(1.0 - std::abs(x), 1.0 - std::abs(y)));
}

double variant_f2(double x, double y) {
  return std::max(0.0, std::min(1.0 - std::abs(x - y), 1.0 - std::abs(x + y)));
}

double variant_mu(double x, double y) {
  return (variant_f1(x, y) + variant_f2(x, y)) / 2.0;
}

double variant_mu(std::span<const double> offset) {
  if (offset.size() != 2) {
    throw DimensionMismatch("the variant shape is two-dimensional");
  }
  return variant_mu(offset[0], offset[1]);
}

}  // namespace fuzzpart
