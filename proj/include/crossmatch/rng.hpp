#ifndef CROSSMATCH_RNG_HPP
#define CROSSMATCH_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace crossmatch {

/// SplitMix64 finalizer: a well-mixed bijection on 64-bit values, used
/// for seed derivation. Independent of platform word size and endianness.
std::uint64_t mix64(std::uint64_t x);

/// Deterministic random stream. Wraps the standard-specified mt19937_64
/// engine; bounded draws use Lemire's unbiased multiply-shift rejection
/// so the consumed engine outputs do not depend on the standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Unbiased uniform draw from [0, bound); bound must be >= 1.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [0, 1) with 53 random bits.
  double unit();

  /// Standard normal deviate (Box-Muller, one spare cached).
  double gaussian();

private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// k distinct indices drawn uniformly from {0, ..., population-1} by
/// partial Fisher-Yates, returned in draw order.
std::vector<std::size_t> sample_without_replacement(Rng& rng,
                                                    std::size_t population,
                                                    std::size_t k);

/// `count` points of dimension `dim`, i.i.d. Gaussian with unit variance
/// per coordinate and common per-coordinate mean `mean`.
std::vector<std::vector<double>> gaussian_cloud(std::size_t count,
                                                std::size_t dim,
                                                std::uint64_t seed,
                                                double mean = 0.0);

}  // namespace crossmatch

#endif  // CROSSMATCH_RNG_HPP
