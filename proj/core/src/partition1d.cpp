#include "fuzzpart/partition1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace fuzzpart {
namespace {

/// Accumulates the worst deviation of one condition and its witness.
class ConditionTracker {
 public:
  explicit ConditionTracker(std::string name) : name_(std::move(name)) {}

  void observe(double deviation, double point, std::string detail = {}) {
    // NaN deviations come from non-finite membership values; report
    // them as unbounded instead of letting the comparison drop them.
    if (std::isnan(deviation)) {
      deviation = std::numeric_limits<double>::infinity();
    }
    if (deviation > max_dev_) {
      max_dev_ = deviation;
      witness_ = point;
      detail_ = std::move(detail);
    }
  }

  ConditionEntry finish(double tol) const {
    ConditionEntry e;
    e.name = name_;
    e.max_deviation = max_dev_;
    if (max_dev_ > tol) {
      e.status = ConditionStatus::Fail;
      e.witness = {witness_};
      e.detail = detail_;
    }
    return e;
  }

 private:
  std::string name_;
  double max_dev_ = 0.0;
  double witness_ = 0.0;
  std::string detail_;
};

std::string set_label(int k) {
  std::ostringstream os;
  os << "set " << k;
  return os.str();
}

}  // namespace

double membership_1d(const Partition1D& p, int k, double x) {
  if (k < 1 || k > p.axis.count) {
    std::ostringstream os;
    os << "set index " << k << " outside 1.." << p.axis.count;
    throw IndexOutOfRange(os.str());
  }
  if (x < p.axis.origin || x > p.axis.upper()) return 0.0;
  const double t = (x - p.axis.node(k)) / p.axis.spacing;
  if (std::abs(t) >= 1.0) return 0.0;
  return p.mf.eval(t);
}

ConditionReport check_definition1(const Partition1D& p, int samples_per_bin,
                                  double tolerance) {
  p.axis.validate();
  std::vector<double> nodes(p.axis.count);
  for (int i = 1; i <= p.axis.count; ++i) nodes[i - 1] = p.axis.node(i);
  return check_definition1(
      nodes, [&p](int k, double x) { return membership_1d(p, k, x); },
      samples_per_bin, tolerance);
}

ConditionReport check_definition1(std::span<const double> nodes,
                                  const Membership1DFamily& mu,
                                  int samples_per_bin, double tolerance) {
  if (samples_per_bin < 2) {
    throw std::invalid_argument("check_definition1: samples_per_bin >= 2");
  }
  const int p = static_cast<int>(nodes.size());
  if (p < 3) {
    throw std::invalid_argument("check_definition1: need at least 3 nodes");
  }
  const double a = nodes.front();
  const double b = nodes.back();
  const double h = nodes[1] - nodes[0];
  const double tol = tolerance;

  // Inclusive per-bin sample grid over the universe.
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(p - 1) * samples_per_bin);
  for (int j = 0; j + 1 < p; ++j) {
    for (int i = 0; i < samples_per_bin; ++i) {
      const double t = static_cast<double>(i) / (samples_per_bin - 1);
      xs.push_back(nodes[j] + t * (nodes[j + 1] - nodes[j]));
    }
  }

  auto window_lo = [&](int k) { return nodes[std::max(k - 2, 0)]; };
  auto window_hi = [&](int k) { return nodes[std::min(k, p - 1)]; };

  ConditionTracker core("core");
  ConditionTracker support("support");
  ConditionTracker continuity("continuity");
  ConditionTracker monotone("monotonicity");
  ConditionTracker coverage("coverage");
  ConditionTracker sum_to_one("sum-to-one");
  ConditionTracker spacing("uniform-spacing");
  ConditionTracker symmetry("symmetry");
  ConditionTracker translation("translation");

  // 1. Core: mu_k(m_k) = 1.
  for (int k = 1; k <= p; ++k) {
    core.observe(std::abs(mu(k, nodes[k - 1]) - 1.0), nodes[k - 1],
                 set_label(k));
  }

  // 2. Support: mu_k vanishes outside [m_{k-1}, m_{k+1}] (boundary sets
  // use the clamped neighbors m_0 = m_1 and m_{p+1} = m_p).
  for (int k = 1; k <= p; ++k) {
    for (double x : xs) {
      if (x >= window_lo(k) && x <= window_hi(k)) continue;
      support.observe(std::abs(mu(k, x)), x, set_label(k));
    }
  }

  // 3. Continuity: fine sweep of each set over (slightly more than) its
  // support window; adjacent jumps must stay within a modulus bound
  // estimated from a 10x coarser stride, slack factor 4.
  {
    const int fine = 2048;
    const int stride = 10;
    std::vector<double> v(fine + 1);
    for (int k = 1; k <= p; ++k) {
      const double pad = 0.05 * h;
      const double lo = std::max(a, window_lo(k) - pad);
      const double hi = std::min(b, window_hi(k) + pad);
      const double step = (hi - lo) / fine;
      for (int i = 0; i <= fine; ++i) v[i] = mu(k, lo + i * step);
      double lipschitz = 0.0;
      for (int i = 0; i + stride <= fine; ++i) {
        lipschitz = std::max(
            lipschitz, std::abs(v[i + stride] - v[i]) / (stride * step));
      }
      const double bound = std::max(4.0 * lipschitz * step, tol);
      for (int i = 0; i < fine; ++i) {
        const double jump = std::abs(v[i + 1] - v[i]);
        continuity.observe(std::max(0.0, jump - bound),
                           lo + (i + 0.5) * step, set_label(k));
      }
    }
  }

  // 4. Monotone up on [m_{k-1}, m_k], down on [m_k, m_{k+1}].
  for (int k = 1; k <= p; ++k) {
    const double m = nodes[k - 1];
    const int n = std::max(samples_per_bin, 8);
    auto sweep = [&](double lo, double hi, bool increasing) {
      if (!(hi > lo)) return;
      double prev = mu(k, lo);
      for (int i = 1; i <= n; ++i) {
        const double x = lo + (hi - lo) * i / n;
        const double val = mu(k, x);
        const double viol = increasing ? prev - val : val - prev;
        monotone.observe(std::max(0.0, viol), x, set_label(k));
        prev = val;
      }
    };
    sweep(window_lo(k), m, true);
    sweep(m, window_hi(k), false);
  }

  // 5. Coverage and 6. sum-to-one over the whole universe.
  for (double x : xs) {
    double total = 0.0;
    double best = 0.0;
    for (int k = 1; k <= p; ++k) {
      const double val = mu(k, x);
      total += val;
      best = std::max(best, val);
    }
    coverage.observe(std::max(0.0, 2.0 * tol - best), x,
                     "no set covers this point");
    sum_to_one.observe(std::abs(total - 1.0), x);
  }

  // 7. Uniform spacing: every gap equals the first one.
  for (int k = 0; k + 1 < p; ++k) {
    const double gap = nodes[k + 1] - nodes[k];
    spacing.observe(std::abs(gap - h) / std::max(1.0, std::abs(h)),
                    nodes[k], "gap " + std::to_string(gap));
  }

  // 8. Symmetry about each interior node, and 9. translation between
  // neighbors; both apply to k = 2..p-1 with boundary sets truncated.
  for (int k = 2; k <= p - 1; ++k) {
    const double m = nodes[k - 1];
    for (int i = 0; i <= samples_per_bin; ++i) {
      const double t = h * i / samples_per_bin;
      symmetry.observe(std::abs(mu(k, m - t) - mu(k, m + t)), m + t,
                       set_label(k));
      const double x = m + t;  // within [m_k, m_{k+1}]
      translation.observe(std::abs(mu(k, x) - mu(k - 1, x - h)), x,
                          set_label(k));
      if (k + 1 <= p) {
        translation.observe(std::abs(mu(k + 1, x) - mu(k, x - h)), x,
                            set_label(k + 1));
      }
    }
  }

  ConditionReport report;
  report.entries = {
      core.finish(tol),       support.finish(tol),  continuity.finish(tol),
      monotone.finish(tol),   coverage.finish(tol), sum_to_one.finish(tol),
      spacing.finish(tol),    symmetry.finish(tol), translation.finish(tol),
  };
  return report;
}

}  // namespace fuzzpart
