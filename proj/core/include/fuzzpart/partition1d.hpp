#pragma once

#include <functional>
#include <span>

#include "fuzzpart/axis.hpp"
#include "fuzzpart/condition_report.hpp"
#include "fuzzpart/normalized_mf.hpp"

namespace fuzzpart {

/// A one-dimensional strong-uniform fuzzy partition: p = axis.count
/// fuzzy sets centered on the axis nodes, each the same translated
/// shape, truncated to the universe at the boundary sets.
struct Partition1D {
  Axis axis;
  NormalizedMF mf;
};

/// Membership of fuzzy set k (1-based) at x: mf((x - node(k)) / spacing)
/// when x lies in the universe and within one spacing of node(k),
/// 0 otherwise. Throws IndexOutOfRange for invalid k.
double membership_1d(const Partition1D& p, int k, double x);

/// Membership family over an explicit node set: mu(k, x) for 1-based k.
using Membership1DFamily = std::function<double(int k, double x)>;

/// Checks the nine defining conditions of a one-dimensional
/// strong-uniform fuzzy partition (core, support, continuity,
/// monotonicity, coverage, sum-to-one, uniform spacing, symmetry,
/// translation). Failures are report entries with witness points,
/// never exceptions.
ConditionReport check_definition1(const Partition1D& p, int samples_per_bin,
                                  double tolerance = 1e-9);

/// Same check over an explicit (possibly non-uniform) node set and an
/// arbitrary membership family; this is how spacing violations are
/// diagnosed rather than made unrepresentable.
ConditionReport check_definition1(std::span<const double> nodes,
                                  const Membership1DFamily& mu,
                                  int samples_per_bin,
                                  double tolerance = 1e-9);

}  // namespace fuzzpart
