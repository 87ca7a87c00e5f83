#pragma once

// Crafted membership functions for exercising the verifier: one
// counterexample per condition, each constructed so that every other
// condition still holds (exactly, or beyond sampling resolution).

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "fuzzpart/normalized_mf.hpp"
#include "fuzzpart/verifier.hpp"

namespace fixtures {

inline double sign(double v) { return (v > 0.0) - (v < 0.0); }

/// C1 bump with unit peak, supported on (-1, 1).
inline double smooth_bump(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  const double w = 1.0 - s * s;
  return w * w;
}

/// Downward step at |t| = 0.5. Complement law, symmetry, and radial
/// monotonicity hold exactly; only continuity is lost.
inline double kinked_eta(double t) {
  const double u = std::abs(t);
  if (u >= 1.0) return 0.0;
  return 1.0 - u - 0.4 * sign(u - 0.5) * u * (1.0 - u);
}

/// Different decay on each side: (1-t)^2 to the right, the complement-
/// matching 1-t^2 to the left. Sums to one, monotone, not mirrored.
inline double asym_eta(double t) {
  if (t >= 1.0 || t <= -1.0) return 0.0;
  if (t >= 0.0) return (1.0 - t) * (1.0 - t);
  return 1.0 - t * t;
}

/// Triangular shape plus a smooth bump out at |t| in (1.1, 1.4); the
/// tail violates compact support but sits below every in-support value
/// any radial pair can reach, and never enters a corner sum.
inline double bump_tail_eta(double t) {
  const double u = std::abs(t);
  return std::max(0.0, 1.0 - u) + 0.1 * smooth_bump((u - 1.25) / 0.15);
}

/// 1 - u plus B(u) - B(1-u) with a bump B steep enough to bend the
/// slope positive near u = 0.15. The antisymmetric pairing keeps the
/// complement law exact; radial monotonicity is what breaks.
inline double bump_knee_eta(double t) {
  const double u = std::abs(t);
  if (u >= 1.0) return 0.0;
  auto B = [](double v) { return 0.12 * smooth_bump((v - 0.2) / 0.1); };
  return 1.0 - u + B(u) - B(1.0 - u);
}

inline fuzzpart::CentralizedMembership tensor2(double (*eta)(double)) {
  return {2, [eta](std::span<const double> o) { return eta(o[0]) * eta(o[1]); }};
}

struct Counterexample {
  std::string target;  // report entry expected to fail
  fuzzpart::CentralizedMembership mu;
  fuzzpart::MembershipFamily family;  // empty = translates of mu
};

/// One fixture per condition of the seven-condition definition, in
/// report order. Spacings are (1, 1).
inline std::vector<Counterexample> counterexamples() {
  using fuzzpart::CentralizedMembership;
  std::vector<Counterexample> out;

  out.push_back({"nonneg-continuity", tensor2(kinked_eta), {}});

  // Declared centralized shape is triangular^2, but the family consists
  // of cosine^2 translates: a valid partition whose sets are not
  // translates of the declared shape.
  {
    auto tri = [](std::span<const double> o) {
      return std::max(0.0, 1.0 - std::abs(o[0])) *
             std::max(0.0, 1.0 - std::abs(o[1]));
    };
    auto cos1 = [](double t) {
      if (std::abs(t) >= 1.0) return 0.0;
      return (std::cos(std::numbers::pi * t) + 1.0) / 2.0;
    };
    fuzzpart::MembershipFamily family =
        [cos1](std::span<const double> core, std::span<const double> x) {
          return cos1(x[0] - core[0]) * cos1(x[1] - core[1]);
        };
    out.push_back(
        {"translational-symmetry", CentralizedMembership{2, tri}, family});
  }

  out.push_back({"mirror-symmetry", tensor2(asym_eta), {}});

  // Triangular^2 with a pinhole defect at the core only; too narrow for
  // any sweep or sum to see, but the core condition samples it exactly.
  {
    auto mu = [](std::span<const double> o) {
      if (o[0] == 0.0 && o[1] == 0.0) return 0.997;
      return std::max(0.0, 1.0 - std::abs(o[0])) *
             std::max(0.0, 1.0 - std::abs(o[1]));
    };
    out.push_back({"core", CentralizedMembership{2, mu}, {}});
  }

  out.push_back({"compact-support", tensor2(bump_tail_eta), {}});

  // The L1 cone: corner sums collapse near bin centers.
  {
    auto mu = [](std::span<const double> o) {
      return std::max(0.0, 1.0 - std::abs(o[0]) - std::abs(o[1]));
    };
    out.push_back({"strong-uniformity", CentralizedMembership{2, mu}, {}});
  }

  out.push_back({"radial-monotonicity", tensor2(bump_knee_eta), {}});
  return out;
}

}  // namespace fixtures
