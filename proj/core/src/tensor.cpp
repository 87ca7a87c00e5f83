#include "fuzzpart/tensor.hpp"

#include <cmath>
#include <sstream>

namespace fuzzpart {

std::vector<FuzzySetId> Bin::corners() const {
  const int d = static_cast<int>(lower.size());
  std::vector<FuzzySetId> out;
  out.reserve(std::size_t{1} << d);
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    FuzzySetId id;
    id.ix.resize(d);
    for (int j = 0; j < d; ++j) {
      id.ix[j] = lower[j] + static_cast<int>((mask >> (d - 1 - j)) & 1u);
    }
    out.push_back(std::move(id));
  }
  return out;
}

TensorPartition::TensorPartition(std::vector<Axis> axes,
                                 std::vector<NormalizedMF> mfs)
    : axes_(std::move(axes)), mfs_(std::move(mfs)) {
  if (axes_.empty() || axes_.size() != mfs_.size()) {
    std::ostringstream os;
    os << "need equally many axes and membership functions (>= 1), got "
       << axes_.size() << " axes and " << mfs_.size() << " mfs";
    throw DimensionMismatch(os.str());
  }
  for (const Axis& a : axes_) a.validate();
  for (const NormalizedMF& mf : mfs_) validate_normalized_mf(mf);
}

void TensorPartition::check_dim(std::size_t got, const char* what) const {
  if (got != axes_.size()) {
    std::ostringstream os;
    os << what << " has dimension " << got << ", partition has "
       << axes_.size();
    throw DimensionMismatch(os.str());
  }
}

void TensorPartition::check_id(const FuzzySetId& id) const {
  check_dim(id.ix.size(), "fuzzy set id");
  for (std::size_t j = 0; j < axes_.size(); ++j) {
    if (id.ix[j] < 1 || id.ix[j] > axes_[j].count) {
      std::ostringstream os;
      os << "index " << id.ix[j] << " outside 1.." << axes_[j].count
         << " on axis " << j + 1;
      throw IndexOutOfRange(os.str());
    }
  }
}

double TensorPartition::centralized(std::span<const double> offset) const {
  check_dim(offset.size(), "offset");
  double prod = 1.0;
  for (std::size_t j = 0; j < axes_.size(); ++j) {
    const double t = offset[j] / axes_[j].spacing;
    if (std::abs(t) >= 1.0) return 0.0;
    prod *= mfs_[j].eval(t);
  }
  return prod;
}

double TensorPartition::membership(const FuzzySetId& id,
                                   std::span<const double> x) const {
  check_id(id);
  check_dim(x.size(), "point");
  if (!in_universe(x)) return 0.0;
  double prod = 1.0;
  for (std::size_t j = 0; j < axes_.size(); ++j) {
    const double t = (x[j] - axes_[j].node(id.ix[j])) / axes_[j].spacing;
    if (std::abs(t) >= 1.0) return 0.0;
    prod *= mfs_[j].eval(t);
  }
  return prod;
}

std::vector<double> TensorPartition::core_of(const FuzzySetId& id) const {
  check_id(id);
  std::vector<double> core(axes_.size());
  for (std::size_t j = 0; j < axes_.size(); ++j) {
    core[j] = axes_[j].node(id.ix[j]);
  }
  return core;
}

bool TensorPartition::in_universe(std::span<const double> x) const {
  return fuzzpart::in_universe(axes_, x);
}

Bin TensorPartition::locate_bin(std::span<const double> x) const {
  return Bin{locate_bin_indices(axes_, x)};
}

double TensorPartition::corner_sum(std::span<const double> x) const {
  const Bin bin = locate_bin(x);
  double sum = 0.0;
  for (const FuzzySetId& id : bin.corners()) sum += membership(id, x);
  return sum;
}

}  // namespace fuzzpart
