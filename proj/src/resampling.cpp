#include "crossmatch/resampling.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "crossmatch/rng.hpp"

namespace crossmatch {

namespace {

// Tag separating the per-collection vocabulary-cap streams from the
// per-repetition streams.
constexpr std::uint64_t kVocabStreamTag = 0x766F636162ull;  // "vocab"

std::vector<std::vector<double>> apply_vocab_cap(
    const std::vector<std::vector<double>>& collection, std::size_t cap,
    std::uint64_t master, std::uint64_t which) {
  if (cap >= collection.size()) return collection;
  Rng rng(derive_rep_seed(master ^ kVocabStreamTag, which));
  auto indices = sample_without_replacement(rng, collection.size(), cap);
  std::sort(indices.begin(), indices.end());
  std::vector<std::vector<double>> subset;
  subset.reserve(cap);
  for (const std::size_t i : indices) subset.push_back(collection[i]);
  return subset;
}

}  // namespace

std::uint64_t derive_rep_seed(std::uint64_t master, std::uint64_t rep_index) {
  return mix64(master + (rep_index + 1) * 0x9E3779B97F4A7C15ull);
}

AggregateResult run_protocol(const std::vector<std::vector<double>>& a,
                             const std::vector<std::vector<double>>& b,
                             const ProtocolConfig& config) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("both collections must be non-empty");
  if (a.front().size() != b.front().size())
    throw std::invalid_argument("collections have different dimensions");
  if (config.sample_size < 1 || config.repetitions < 1)
    throw std::invalid_argument("sample_size and repetitions must be >= 1");

  std::vector<std::vector<double>> pool_a = a;
  std::vector<std::vector<double>> pool_b = b;
  if (config.vocab_cap) {
    pool_a = apply_vocab_cap(pool_a, *config.vocab_cap, config.seed, 0);
    pool_b = apply_vocab_cap(pool_b, *config.vocab_cap, config.seed, 1);
  }
  if (config.sample_size > pool_a.size() || config.sample_size > pool_b.size())
    throw std::invalid_argument(
        "sample_size exceeds a collection (after any vocabulary cap)");

  // All repetitions share one (n, m); build the null distribution once.
  const NullDistribution shared_null =
      null_distribution(config.sample_size, config.sample_size);

  std::vector<TestResult> per_rep(config.repetitions);

  auto run_one = [&](std::size_t rep) {
    const std::uint64_t rep_seed = derive_rep_seed(config.seed, rep);
    Rng rng(rep_seed);
    const auto idx_a =
        sample_without_replacement(rng, pool_a.size(), config.sample_size);
    const auto idx_b =
        sample_without_replacement(rng, pool_b.size(), config.sample_size);
    std::vector<std::vector<double>> group_a, group_b;
    group_a.reserve(config.sample_size);
    group_b.reserve(config.sample_size);
    for (const std::size_t i : idx_a) group_a.push_back(pool_a[i]);
    for (const std::size_t i : idx_b) group_b.push_back(pool_b[i]);

    TestResult result = run_cross_match_test(
        pooled_from_groups(group_a, group_b), config.metric, config.mode,
        &shared_null);
    result.seed = rep_seed;
    per_rep[rep] = std::move(result);
  };

  unsigned threads = config.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, config.repetitions));

  if (threads <= 1) {
    for (std::size_t rep = 0; rep < config.repetitions; ++rep) run_one(rep);
  } else {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (std::size_t rep = t; rep < config.repetitions; rep += threads)
            run_one(rep);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    if (failure) std::rethrow_exception(failure);
  }

  // Aggregate in repetition order so the result does not depend on
  // scheduling.
  AggregateResult aggregate;
  aggregate.config = config;
  double sum_c1 = 0.0;
  double sum_p = 0.0;
  for (const TestResult& r : per_rep) {
    sum_c1 += static_cast<double>(r.c1);
    sum_p += r.p_value;
  }
  const auto reps = static_cast<double>(config.repetitions);
  aggregate.mean_c1 = sum_c1 / reps;
  aggregate.mean_p = sum_p / reps;
  double ss = 0.0;
  for (const TestResult& r : per_rep) {
    const double d = static_cast<double>(r.c1) - aggregate.mean_c1;
    ss += d * d;
  }
  aggregate.sd_c1 =
      config.repetitions > 1 ? std::sqrt(ss / (reps - 1.0)) : 0.0;
  aggregate.per_rep = std::move(per_rep);
  return aggregate;
}

}  // namespace crossmatch
