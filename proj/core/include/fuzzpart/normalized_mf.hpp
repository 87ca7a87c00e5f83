#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzpart/errors.hpp"

namespace fuzzpart {

/// A one-dimensional normalized membership function: the shape of a
/// fuzzy set rescaled to unit node spacing, independent of nodes and
/// intervals. Valid instances satisfy eta(0) = 1, eta(x) = 0 for
/// |x| >= 1, mirror symmetry, monotonicity on [0, 1], continuity, and
/// the complement law eta(u) + eta(1-u) = 1.
struct NormalizedMF {
  std::string name;
  std::function<double(double)> eval;

  double operator()(double x) const { return eval(x); }
};

/// eta(x) = max(0, 1 - |x|).
NormalizedMF mf_triangular();

/// eta(x) = (cos(pi x) + 1) / 2 for |x| <= 1, 0 otherwise.
NormalizedMF mf_cosine();

/// The built-in registry of normalized membership functions.
const std::vector<NormalizedMF>& builtin_mfs();
std::optional<NormalizedMF> find_builtin(std::string_view name);

struct MFValidationConfig {
  int samples = 2048;       // per check; the continuity sweep uses 4x
  double tolerance = 1e-9;  // absolute, for all equality checks
};

/// Checks every NormalizedMF invariant numerically on a sample grid.
/// Throws InvalidMF carrying the first violated invariant and a
/// witness point. Check order: core, support, symmetry, monotonicity,
/// continuity, complement.
void validate_normalized_mf(const NormalizedMF& mf,
                            const MFValidationConfig& cfg = {});

/// Rescales a centralized membership function mu with the given node
/// spacing to a normalized one: eta(x) = mu(spacing * x). The result
/// is validated; an invalid mu is an error, never silently accepted.
NormalizedMF normalize(std::function<double(double)> mu, double spacing,
                       std::string name = "normalized",
                       const MFValidationConfig& cfg = {});

}  // namespace fuzzpart
