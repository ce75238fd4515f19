#ifndef CROSSMATCH_CORE_HPP
#define CROSSMATCH_CORE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossmatch {

/// Raised when an input file cannot be read or parsed. Distinct from
/// std::invalid_argument (precondition violations) so callers can map
/// the two to different exit codes.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A real vector tagged with its sample-of-origin label (0 or 1).
struct LabeledPoint {
  std::vector<double> coords;
  int label = 0;
};

/// Distance functions selectable for the pooled sample.
/// cosine_distance is 1 - cosine similarity and requires nonzero vectors.
enum class Metric {
  euclidean,
  squared_euclidean,
  cosine_distance,
  manhattan,
};

/// Canonical CLI/metadata name for a metric.
std::string metric_name(Metric metric);

/// Inverse of metric_name; also accepts the short CLI spellings
/// ("sqeuclidean", "cosine"). Throws std::invalid_argument on unknown names.
Metric metric_from_name(const std::string& name);

/// Both samples pooled into one labeled point set. Label-0 points come
/// first (count n), then label-1 points (count m).
class PooledSample {
public:
  PooledSample(std::vector<LabeledPoint> points, std::size_t n, std::size_t m);

  const std::vector<LabeledPoint>& points() const { return points_; }
  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t size() const { return points_.size(); }
  std::size_t dim() const { return dim_; }

  /// Group label of every point, in pooled order.
  std::vector<int> labels() const;

private:
  std::vector<LabeledPoint> points_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t dim_ = 0;
};

/// Pools two groups of raw vectors: group `a` becomes label 0, group `b`
/// label 1, original order preserved. Throws std::invalid_argument on an
/// empty group or inconsistent dimensions.
PooledSample pooled_from_groups(const std::vector<std::vector<double>>& a,
                                const std::vector<std::vector<double>>& b);

/// Dense symmetric N x N distance matrix with zero diagonal.
class DistanceMatrix {
public:
  /// Validates symmetry, zero diagonal, nonnegativity and finiteness of
  /// `entries` (must hold size*size values, row-major).
  DistanceMatrix(std::size_t size, std::vector<double> entries);

  std::size_t size() const { return size_; }
  double operator()(std::size_t k, std::size_t l) const {
    return entries_[k * size_ + l];
  }
  const std::vector<double>& entries() const { return entries_; }

  /// Largest entry (0 for the 1x1 matrix).
  double max_entry() const;

private:
  friend DistanceMatrix build_distance_matrix(const PooledSample&, Metric);
  struct Unchecked {};
  DistanceMatrix(std::size_t size, std::vector<double> entries, Unchecked);

  std::size_t size_ = 0;
  std::vector<double> entries_;
};

/// Pairwise distances of the pooled sample under `metric`. Rows may be
/// computed in parallel; the result is bit-identical regardless of
/// scheduling. Throws std::invalid_argument on a zero vector under
/// cosine_distance.
DistanceMatrix build_distance_matrix(const PooledSample& sample, Metric metric);

/// Convenience for tests and the bench command: distance matrix over raw
/// coordinate vectors without labels.
DistanceMatrix distance_matrix_of(const std::vector<std::vector<double>>& points,
                                  Metric metric);

}  // namespace crossmatch

#endif  // CROSSMATCH_CORE_HPP
