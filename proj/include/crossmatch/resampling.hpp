#ifndef CROSSMATCH_RESAMPLING_HPP
#define CROSSMATCH_RESAMPLING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "crossmatch/core.hpp"
#include "crossmatch/inference.hpp"

namespace crossmatch {

/// Parameters of the repeated-subsampling protocol: per repetition, draw
/// `sample_size` vectors without replacement from each collection
/// independently, run one cross-match test, and aggregate.
struct ProtocolConfig {
  std::size_t sample_size = 200;
  std::size_t repetitions = 500;
  Metric metric = Metric::euclidean;
  std::uint64_t seed = 0;
  MatchMode mode = MatchMode::exact;
  /// When set and smaller than a collection, a seeded uniform subset of
  /// this many vectors is drawn once per collection before repetitions.
  std::optional<std::size_t> vocab_cap;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct AggregateResult {
  double mean_c1 = 0.0;
  double sd_c1 = 0.0;
  double mean_p = 0.0;
  std::vector<TestResult> per_rep;  // ordered by repetition index
  ProtocolConfig config;
};

/// Substream seed for repetition `rep_index` under `master`. Stable
/// mixing function: mix64(master + (rep_index + 1) * golden gamma);
/// distinct repetition indices give distinct streams.
std::uint64_t derive_rep_seed(std::uint64_t master, std::uint64_t rep_index);

/// Runs the protocol. Repetitions may execute on several threads; the
/// per-repetition streams depend only on (seed, repetition index) and
/// aggregation is in repetition order, so the result is bit-identical
/// for any thread count.
AggregateResult run_protocol(const std::vector<std::vector<double>>& a,
                             const std::vector<std::vector<double>>& b,
                             const ProtocolConfig& config);

}  // namespace crossmatch

#endif  // CROSSMATCH_RESAMPLING_HPP
