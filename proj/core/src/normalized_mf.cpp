#include "fuzzpart/normalized_mf.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

namespace fuzzpart {
namespace {

/// Scans one invariant and throws with the worst witness found.
class InvariantCheck {
 public:
  InvariantCheck(MFInvariant invariant, double tolerance)
      : invariant_(invariant), tolerance_(tolerance) {}

  void observe(double deviation, double point, double got, double want) {
    if (deviation > max_dev_) {
      max_dev_ = deviation;
      witness_ = point;
      got_ = got;
      want_ = want;
    }
  }

  void finish() const {
    if (max_dev_ <= tolerance_) return;
    std::ostringstream os;
    os << "got " << got_ << ", want " << want_;
    throw InvalidMF(invariant_, witness_, os.str());
  }

 private:
  MFInvariant invariant_;
  double tolerance_;
  double max_dev_ = 0.0;
  double witness_ = 0.0;
  double got_ = 0.0;
  double want_ = 0.0;
};

}  // namespace

NormalizedMF mf_triangular() {
  return {"triangular",
          [](double x) { return std::max(0.0, 1.0 - std::abs(x)); }};
}

NormalizedMF mf_cosine() {
  return {"cosine", [](double x) {
            if (std::abs(x) >= 1.0) return 0.0;
            return (std::cos(std::numbers::pi * x) + 1.0) / 2.0;
          }};
}

const std::vector<NormalizedMF>& builtin_mfs() {
  static const std::vector<NormalizedMF> mfs = {mf_triangular(), mf_cosine()};
  return mfs;
}

std::optional<NormalizedMF> find_builtin(std::string_view name) {
  for (const auto& mf : builtin_mfs()) {
    if (mf.name == name) return mf;
  }
  return std::nullopt;
}

void validate_normalized_mf(const NormalizedMF& mf,
                            const MFValidationConfig& cfg) {
  const double tol = cfg.tolerance;
  const int n = std::max(cfg.samples, 64);

  auto eval = [&](double x) {
    const double v = mf.eval(x);
    if (!std::isfinite(v)) {
      throw InvalidMF(MFInvariant::Evaluation, x, "non-finite value");
    }
    return v;
  };

  // Core: eta(0) = 1.
  {
    InvariantCheck check(MFInvariant::Core, tol);
    const double v = eval(0.0);
    check.observe(std::abs(v - 1.0), 0.0, v, 1.0);
    check.finish();
  }

  // Support: eta vanishes at +-1 and beyond.
  {
    InvariantCheck check(MFInvariant::Support, tol);
    const int outer = n / 8;
    for (int i = 0; i <= outer; ++i) {
      const double x = 1.0 + static_cast<double>(i) / outer;
      for (double s : {x, -x}) {
        const double v = eval(s);
        check.observe(std::abs(v), s, v, 0.0);
      }
    }
    check.finish();
  }

  // Mirror symmetry on (0, 1).
  {
    InvariantCheck check(MFInvariant::Symmetry, tol);
    for (int i = 1; i < n; ++i) {
      const double x = static_cast<double>(i) / n;
      const double pos = eval(x);
      const double neg = eval(-x);
      check.observe(std::abs(pos - neg), x, pos, neg);
    }
    check.finish();
  }

  // Non-increasing on [0, 1].
  {
    InvariantCheck check(MFInvariant::Monotonicity, tol);
    double prev = eval(0.0);
    for (int i = 1; i <= n; ++i) {
      const double x = static_cast<double>(i) / n;
      const double v = eval(x);
      check.observe(v - prev, x, v, prev);
      prev = v;
    }
    check.finish();
  }

  // Continuity: on a fine grid, adjacent jumps must stay within a
  // modulus bound derived from a 10x coarser stride, slack factor 4.
  // A genuine step inflates the coarse estimate by at most the jump
  // itself over ten steps, so 4/10 of it still flags the step.
  {
    const int fine = std::max(4 * n, 512);
    const double lo = -1.1, hi = 1.1;
    const double step = (hi - lo) / fine;
    std::vector<double> v(fine + 1);
    for (int i = 0; i <= fine; ++i) v[i] = eval(lo + i * step);

    const int stride = 10;
    double lipschitz = 0.0;
    for (int i = 0; i + stride <= fine; ++i) {
      lipschitz = std::max(lipschitz,
                           std::abs(v[i + stride] - v[i]) / (stride * step));
    }
    const double bound = std::max(4.0 * lipschitz * step, tol);
    InvariantCheck check(MFInvariant::Continuity, 0.0);
    for (int i = 0; i < fine; ++i) {
      const double jump = std::abs(v[i + 1] - v[i]);
      check.observe(jump - bound, lo + (i + 0.5) * step, jump, bound);
    }
    check.finish();
  }

  // Complement law on [0, 1].
  {
    InvariantCheck check(MFInvariant::Complement, tol);
    for (int i = 0; i <= n; ++i) {
      const double u = static_cast<double>(i) / n;
      const double s = eval(u) + eval(1.0 - u);
      check.observe(std::abs(s - 1.0), u, s, 1.0);
    }
    check.finish();
  }
}

NormalizedMF normalize(std::function<double(double)> mu, double spacing,
                       std::string name, const MFValidationConfig& cfg) {
  if (!(spacing > 0.0)) {
    throw InvalidAxis("normalize: spacing must be positive");
  }
  NormalizedMF eta{std::move(name),
                   [mu = std::move(mu), spacing](double x) {
                     return mu(spacing * x);
                   }};
  validate_normalized_mf(eta, cfg);
  return eta;
}

}  // namespace fuzzpart
