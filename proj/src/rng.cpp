#include "crossmatch/rng.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace crossmatch {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be >= 1");
  while (true) {
    const std::uint64_t x = next();
    const auto product = static_cast<unsigned __int128>(x) * bound;
    const auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      if (low < threshold) continue;
    }
    return static_cast<std::uint64_t>(product >> 64);
  }
}

double Rng::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] so the log is finite.
  const double u1 = (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = unit();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::vector<std::size_t> sample_without_replacement(Rng& rng,
                                                    std::size_t population,
                                                    std::size_t k) {
  if (k > population)
    throw std::invalid_argument("cannot sample more than the population size");
  std::vector<std::size_t> indices(population);
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.below(population - i);
    std::swap(indices[i], indices[j]);
  }
  indices.resize(k);
  return indices;
}

std::vector<std::vector<double>> gaussian_cloud(std::size_t count,
                                                std::size_t dim,
                                                std::uint64_t seed,
                                                double mean) {
  Rng rng(seed);
  std::vector<std::vector<double>> points(count);
  for (auto& p : points) {
    p.resize(dim);
    for (auto& x : p) x = mean + rng.gaussian();
  }
  return points;
}

}  // namespace crossmatch
