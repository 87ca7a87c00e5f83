#pragma once

#include <span>

namespace fuzzpart {

/// A two-dimensional strong-uniform partition shape that is not a
/// tensor product: the average of an L-infinity tent and its 45-degree
/// rotation. It agrees with the triangular tensor shape on the
/// coordinate axes and differs away from them, demonstrating that the
/// tensor construction is sufficient but not necessary.

/// f1(x, y) = max(0, min(1 - |x|, 1 - |y|)).
double variant_f1(double x, double y);

/// f2(x, y) = max(0, min(1 - |x - y|, 1 - |x + y|)).
double variant_f2(double x, double y);

/// (f1 + f2) / 2.
double variant_mu(double x, double y);

double variant_mu(std::span<const double> offset);

}  // namespace fuzzpart
