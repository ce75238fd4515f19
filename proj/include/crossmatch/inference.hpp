#ifndef CROSSMATCH_INFERENCE_HPP
#define CROSSMATCH_INFERENCE_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "crossmatch/core.hpp"
#include "crossmatch/matching.hpp"

namespace crossmatch {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact null distribution of the cross-match count for group sizes
/// (n, m): the law of the number of mixed pairs when the n + m labels are
/// assigned at random to a fixed perfect pairing.
///
/// support = { c : 0 <= c <= min(n, m), c == n (mod 2) }, and the pmf is
///
///   f(c) = 2^c (N/2)! / ( C(N, n) c0! c! c2! ),  c0 = (n-c)/2, c2 = (m-c)/2
///
/// kept as exact rationals; pmf sums to exactly 1 by construction (this
/// normalization is asserted at build time).
struct NullDistribution {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::size_t> support;
  std::vector<BigRational> pmf;
  std::vector<BigRational> cdf;

  /// F(c) = P(C <= c); throws std::invalid_argument when c is not in the
  /// support (out-of-support observations indicate an upstream bug).
  const BigRational& cdf_at(std::size_t c) const;
};

/// f(c1) as an exact rational. Out-of-support c1 (parity mismatch or
/// negative pair count) yields exactly 0. Throws std::invalid_argument
/// when n + m is odd or a group is empty.
BigRational null_pmf(std::size_t n, std::size_t m, std::size_t c1);

/// Full support/pmf/cdf for (n, m).
NullDistribution null_distribution(std::size_t n, std::size_t m);

/// Exact p-value P(C <= observed_c1); the test rejects for small counts.
BigRational p_value(std::size_t n, std::size_t m, std::size_t observed_c1);

/// E[C] = sum c * f(c) = n * m / (N - 1), as floating point.
double expected_cross_matches(std::size_t n, std::size_t m);

/// Floating-point log-space evaluations (lgamma based). These exist as a
/// cross-check of the exact path and for group sizes beyond rational
/// range; the exact path is authoritative.
double log_null_pmf(std::size_t n, std::size_t m, std::size_t c1);
double p_value_log_space(std::size_t n, std::size_t m, std::size_t observed_c1);

/// Outcome of one cross-match test. n and m are the effective group
/// sizes entering the null distribution (after the odd-N discard rule,
/// when it applies).
struct TestResult {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t c0 = 0;
  std::size_t c1 = 0;
  std::size_t c2 = 0;
  double p_value = 1.0;
  BigRational p_exact;
  double matching_weight = 0.0;
  Metric metric = Metric::euclidean;
  bool exact = true;  // exact matching (false: greedy approximation)
  std::optional<std::uint64_t> seed;
  bool padded = false;
  std::optional<std::size_t> discarded_point;
};

enum class MatchMode { exact, greedy };

/// Runs the whole test on one pooled sample: distance matrix, matching
/// (padding and discarding when the pooled count is odd), pair-type
/// counts and the exact p-value. `shared_null` may supply a precomputed
/// distribution for the effective (n, m) to avoid rebuilding it per call;
/// it is consulted only when the sizes match.
TestResult run_cross_match_test(const PooledSample& sample, Metric metric,
                                MatchMode mode,
                                const NullDistribution* shared_null = nullptr);

}  // namespace crossmatch

#endif  // CROSSMATCH_INFERENCE_HPP
