#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fuzzpart/condition_report.hpp"
#include "fuzzpart/partition1d.hpp"
#include "fuzzpart/tensor.hpp"

namespace fuzzpart {

struct VerifyConfig {
  int samples_per_axis = 33;  // regular grid resolution per axis
  int random_points = 1000;
  double tolerance = 1e-9;
  std::vector<double> epsilons = {0.01, 0.1, 1.0};  // radial monotonicity
  std::uint64_t seed = 42;
};

/// A d-dimensional centralized membership function under test. Works in
/// data units: offsets are measured from the core in the same units as
/// the node spacings.
struct CentralizedMembership {
  int dim = 0;
  std::function<double(std::span<const double>)> mu;
};

/// Optional per-set membership family (core node, x) -> degree. When
/// absent, every set is the translate of the centralized shape, which
/// is what the tensor construction produces.
using MembershipFamily =
    std::function<double(std::span<const double>, std::span<const double>)>;

CentralizedMembership centralized_of(const TensorPartition& tp);

/// The non-tensor variant as a centralized membership with the given
/// per-axis spacings.
CentralizedMembership variant_centralized(double c1 = 1.0, double c2 = 1.0);

/// Numerically checks the seven conditions a d-dimensional centralized
/// membership must satisfy to generate a strong-uniform fuzzy
/// partition: (1) non-negative and continuous, (2) translational
/// symmetry, (3) mirror symmetry, (4) core normalization, (5) compact
/// support, (6) strong uniformity, (7) radial monotonicity.
///
/// Condition 6 is checked through the corner-sum identity on a
/// synthetic 3-node-per-axis partition, sampling bin interiors; each
/// condition is checked independently of the others' outcomes. The
/// regular grid is capped at 10^6 total points; past the cap the grid
/// coarsens uniformly and the random sample grows. Failures are report
/// entries; only a dimension mismatch throws.
ConditionReport verify_definition2(const CentralizedMembership& mu,
                                   std::span<const double> spacings,
                                   const VerifyConfig& cfg = {},
                                   const MembershipFamily& family = {});

/// Nine-condition check for one-dimensional partitions (delegates to
/// check_definition1; samples_per_bin derives from samples_per_axis).
ConditionReport verify_definition1(const Partition1D& p,
                                   const VerifyConfig& cfg = {});
ConditionReport verify_definition1(std::span<const double> nodes,
                                   const Membership1DFamily& mu,
                                   const VerifyConfig& cfg = {});

}  // namespace fuzzpart
