#include "fuzzpart/histogram.hpp"

#include <cmath>
#include <sstream>

namespace fuzzpart {
namespace {

double cell_volume(std::span<const Axis> axes) {
  double v = 1.0;
  for (const Axis& a : axes) v *= a.spacing;
  return v;
}

bool same_layout(const std::vector<Axis>& a, const std::vector<Axis>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].origin != b[j].origin || a[j].spacing != b[j].spacing ||
        a[j].count != b[j].count) {
      return false;
    }
  }
  return true;
}

}  // namespace

void Dataset::validate() const {
  if (width == 0) {
    if (!values.empty()) throw Error("dataset has values but zero width");
    return;
  }
  if (values.size() % width != 0) {
    throw Error("dataset size is not a multiple of its width");
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw Error("dataset contains a non-finite entry");
  }
}

void Accumulator::add(double v) {
  const double t = sum + v;
  if (std::abs(sum) >= std::abs(v)) {
    comp += (sum - t) + v;
  } else {
    comp += (v - t) + sum;
  }
  sum = t;
}

void Accumulator::merge(const Accumulator& other) {
  add(other.sum);
  add(other.comp);
}

double FuzzyHistogram::total_mass() const {
  Accumulator total;
  for (const auto& [ix, acc] : cells) total.add(acc.value());
  return total.value();
}

double FuzzyHistogram::mass_of(const FuzzySetId& id) const {
  auto it = cells.find(id.ix);
  return it == cells.end() ? 0.0 : it->second.value();
}

void FuzzyHistogram::merge(const FuzzyHistogram& other) {
  if (!same_layout(partition.axes(), other.partition.axes())) {
    throw DimensionMismatch("merging histograms over different partitions");
  }
  for (const auto& [ix, acc] : other.cells) cells[ix].merge(acc);
  dropped += other.dropped;
  total_points += other.total_points;
}

void CrispHistogram::merge(const CrispHistogram& other) {
  if (!same_layout(axes, other.axes)) {
    throw DimensionMismatch("merging histograms over different axes");
  }
  for (const auto& [ix, n] : other.counts) counts[ix] += n;
  dropped += other.dropped;
  total_points += other.total_points;
}

FuzzyHistogram accumulate_fuzzy(const TensorPartition& tp,
                                const Dataset& data) {
  data.validate();
  if (data.width != static_cast<std::size_t>(tp.dim())) {
    throw DimensionMismatch("dataset width does not match partition dimension");
  }
  FuzzyHistogram h{tp, {}, 0, data.rows()};
  for (std::size_t i = 0; i < data.rows(); ++i) {
    const auto x = data.row(i);
    if (!tp.in_universe(x)) {
      ++h.dropped;
      continue;
    }
    const Bin bin = tp.locate_bin(x);
    for (const FuzzySetId& id : bin.corners()) {
      const double m = tp.membership(id, x);
      if (m != 0.0) h.cells[id.ix].add(m);
    }
  }
  return h;
}

CrispHistogram accumulate_crisp(const std::vector<Axis>& axes,
                                const Dataset& data) {
  data.validate();
  if (data.width != axes.size()) {
    throw DimensionMismatch("dataset width does not match axes");
  }
  for (const Axis& a : axes) a.validate();
  CrispHistogram h{axes, {}, 0, data.rows()};
  for (std::size_t i = 0; i < data.rows(); ++i) {
    const auto x = data.row(i);
    if (!in_universe(axes, x)) {
      ++h.dropped;
      continue;
    }
    ++h.counts[locate_bin_indices(axes, x)];
  }
  return h;
}

double density_estimate(const FuzzyHistogram& h, std::span<const double> x) {
  if (h.effective_points() == 0) {
    throw EmptyHistogram("no points were accumulated");
  }
  if (!h.partition.in_universe(x)) {
    throw OutOfUniverse("density requested outside the universe");
  }
  const Bin bin = h.partition.locate_bin(x);
  double weighted = 0.0;
  for (const FuzzySetId& id : bin.corners()) {
    const double mass = h.mass_of(id);
    if (mass != 0.0) weighted += mass * h.partition.membership(id, x);
  }
  return weighted /
         (static_cast<double>(h.effective_points()) *
          cell_volume(h.partition.axes()));
}

double density_estimate(const CrispHistogram& h, std::span<const double> x) {
  if (h.effective_points() == 0) {
    throw EmptyHistogram("no points were accumulated");
  }
  if (!in_universe(h.axes, x)) {
    throw OutOfUniverse("density requested outside the universe");
  }
  const auto ix = locate_bin_indices(h.axes, x);
  auto it = h.counts.find(ix);
  const double count = it == h.counts.end()
                           ? 0.0
                           : static_cast<double>(it->second);
  return count /
         (static_cast<double>(h.effective_points()) * cell_volume(h.axes));
}

std::vector<ShiftRow> shift_sensitivity(EstimatorKind kind,
                                        const Dataset& data,
                                        const std::vector<Axis>& axes,
                                        const std::vector<NormalizedMF>& mfs,
                                        std::span<const double> shifts,
                                        int eval_points_per_axis) {
  for (double s : shifts) {
    if (!(s >= 0.0 && s < 1.0)) {
      throw Error("shift fractions must lie in [0, 1)");
    }
  }
  const std::size_t d = axes.size();

  // Fixed evaluation grid: midpoints of [origin + spacing, upper] per
  // axis, which lies inside every universe shifted by s in [0, 1).
  const int ne = std::max(eval_points_per_axis, 2);
  std::vector<std::vector<double>> grid;
  {
    std::vector<int> idx(d, 0);
    std::vector<double> x(d);
    while (true) {
      for (std::size_t j = 0; j < d; ++j) {
        const double lo = axes[j].origin + axes[j].spacing;
        const double hi = axes[j].upper();
        x[j] = lo + (hi - lo) * (idx[j] + 0.5) / ne;
      }
      grid.push_back(x);
      std::size_t j = d;
      while (j > 0 && ++idx[j - 1] == ne) idx[--j] = 0;
      if (j == 0) break;
    }
  }

  auto estimate_field = [&](double shift) {
    std::vector<Axis> shifted = axes;
    for (Axis& a : shifted) a.origin += shift * a.spacing;
    std::vector<double> field(grid.size());
    if (kind == EstimatorKind::Fuzzy) {
      const FuzzyHistogram h =
          accumulate_fuzzy(TensorPartition(shifted, mfs), data);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        field[i] = density_estimate(h, grid[i]);
      }
    } else {
      const CrispHistogram h = accumulate_crisp(shifted, data);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        field[i] = density_estimate(h, grid[i]);
      }
    }
    return field;
  };

  const std::vector<double> baseline = estimate_field(0.0);
  std::vector<ShiftRow> rows;
  rows.reserve(shifts.size());
  for (double s : shifts) {
    const std::vector<double> shifted = estimate_field(s);
    double l1 = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      l1 += std::abs(shifted[i] - baseline[i]);
    }
    rows.push_back({s, l1 / static_cast<double>(grid.size())});
  }
  return rows;
}

}  // namespace fuzzpart
