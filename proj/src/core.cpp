#include "crossmatch/core.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace crossmatch {

namespace {

void check_point(const LabeledPoint& p) {
  if (p.coords.empty())
    throw std::invalid_argument("point has no coordinates");
  if (p.label != 0 && p.label != 1)
    throw std::invalid_argument("label must be 0 or 1");
  for (double x : p.coords)
    if (!std::isfinite(x))
      throw std::invalid_argument("non-finite coordinate");
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double squared_distance(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return s;
}

double manhattan_distance(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::abs(x[i] - y[i]);
  return s;
}

}  // namespace

std::string metric_name(Metric metric) {
  switch (metric) {
    case Metric::euclidean: return "euclidean";
    case Metric::squared_euclidean: return "sqeuclidean";
    case Metric::cosine_distance: return "cosine";
    case Metric::manhattan: return "manhattan";
  }
  throw std::invalid_argument("unknown metric");
}

Metric metric_from_name(const std::string& name) {
  if (name == "euclidean") return Metric::euclidean;
  if (name == "sqeuclidean" || name == "squared_euclidean")
    return Metric::squared_euclidean;
  if (name == "cosine" || name == "cosine_distance") return Metric::cosine_distance;
  if (name == "manhattan") return Metric::manhattan;
  throw std::invalid_argument("unknown metric: " + name);
}

PooledSample::PooledSample(std::vector<LabeledPoint> points, std::size_t n,
                           std::size_t m)
    : points_(std::move(points)), n_(n), m_(m) {
  if (n_ < 1 || m_ < 1)
    throw std::invalid_argument("both groups must be non-empty");
  if (points_.size() != n_ + m_)
    throw std::invalid_argument("point count does not equal n + m");
  dim_ = points_.front().coords.size();
  for (const auto& p : points_) {
    check_point(p);
    if (p.coords.size() != dim_)
      throw std::invalid_argument("dimension mismatch among points");
  }
}

std::vector<int> PooledSample::labels() const {
  std::vector<int> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.label);
  return out;
}

PooledSample pooled_from_groups(const std::vector<std::vector<double>>& a,
                                const std::vector<std::vector<double>>& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("both groups must be non-empty");
  std::vector<LabeledPoint> points;
  points.reserve(a.size() + b.size());
  for (const auto& v : a) points.push_back({v, 0});
  for (const auto& v : b) points.push_back({v, 1});
  return PooledSample(std::move(points), a.size(), b.size());
}

DistanceMatrix::DistanceMatrix(std::size_t size, std::vector<double> entries)
    : size_(size), entries_(std::move(entries)) {
  if (entries_.size() != size_ * size_)
    throw std::invalid_argument("entry count does not match matrix size");
  for (std::size_t k = 0; k < size_; ++k) {
    if (entries_[k * size_ + k] != 0.0)
      throw std::invalid_argument("nonzero diagonal entry");
    for (std::size_t l = 0; l < size_; ++l) {
      const double d = entries_[k * size_ + l];
      if (!std::isfinite(d) || d < 0.0)
        throw std::invalid_argument("distance entries must be finite and >= 0");
      if (d != entries_[l * size_ + k])
        throw std::invalid_argument("distance matrix must be symmetric");
    }
  }
}

DistanceMatrix::DistanceMatrix(std::size_t size, std::vector<double> entries,
                               Unchecked)
    : size_(size), entries_(std::move(entries)) {}

double DistanceMatrix::max_entry() const {
  double mx = 0.0;
  for (double d : entries_) mx = std::max(mx, d);
  return mx;
}

DistanceMatrix build_distance_matrix(const PooledSample& sample, Metric metric) {
  const auto& pts = sample.points();
  const std::size_t n = pts.size();

  // Cosine needs norms up front; a zero vector has no direction.
  std::vector<double> norms;
  if (metric == Metric::cosine_distance) {
    norms.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      norms[k] = std::sqrt(dot(pts[k].coords, pts[k].coords));
      if (norms[k] == 0.0)
        throw std::invalid_argument("zero vector not allowed under cosine distance");
    }
  }

  std::vector<double> entries(n * n, 0.0);
  auto fill_row = [&](std::size_t k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      double d = 0.0;
      switch (metric) {
        case Metric::euclidean:
          d = std::sqrt(squared_distance(pts[k].coords, pts[l].coords));
          break;
        case Metric::squared_euclidean:
          d = squared_distance(pts[k].coords, pts[l].coords);
          break;
        case Metric::cosine_distance:
          d = 1.0 - dot(pts[k].coords, pts[l].coords) / (norms[k] * norms[l]);
          // Rounding can push 1 - cos slightly negative for parallel vectors.
          d = std::max(d, 0.0);
          break;
        case Metric::manhattan:
          d = manhattan_distance(pts[k].coords, pts[l].coords);
          break;
      }
      entries[k * n + l] = d;
      entries[l * n + k] = d;
    }
  };

  // Each row is independent, so a static split over threads produces the
  // same bits as the sequential loop.
  const std::size_t hw = std::thread::hardware_concurrency();
  if (n >= 128 && hw > 1) {
    std::vector<std::thread> workers;
    workers.reserve(hw);
    for (std::size_t t = 0; t < hw; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t k = t; k < n; k += hw) fill_row(k);
      });
    }
    for (auto& w : workers) w.join();
  } else {
    for (std::size_t k = 0; k < n; ++k) fill_row(k);
  }

  return DistanceMatrix(n, std::move(entries), DistanceMatrix::Unchecked{});
}

DistanceMatrix distance_matrix_of(const std::vector<std::vector<double>>& points,
                                  Metric metric) {
  if (points.size() < 2)
    throw std::invalid_argument("need at least two points");
  std::vector<LabeledPoint> labeled;
  labeled.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    labeled.push_back({points[i], i + 1 < points.size() ? 0 : 1});
  PooledSample sample(std::move(labeled), points.size() - 1, 1);
  return build_distance_matrix(sample, metric);
}

}  // namespace crossmatch
