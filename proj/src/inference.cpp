#include "crossmatch/inference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace crossmatch {

namespace {

void check_group_sizes(std::size_t n, std::size_t m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("group sizes must be at least 1");
  if ((n + m) % 2 != 0)
    throw std::invalid_argument(
        "n + m must be even (resolve padding before computing the null)");
}

std::vector<BigInt> factorial_table(std::size_t upto) {
  std::vector<BigInt> fact(upto + 1);
  fact[0] = 1;
  for (std::size_t i = 1; i <= upto; ++i) fact[i] = fact[i - 1] * i;
  return fact;
}

BigRational pmf_term(const std::vector<BigInt>& fact, std::size_t n,
                     std::size_t m, std::size_t c1) {
  const std::size_t N = n + m;
  if (c1 > std::min(n, m) || (n - c1) % 2 != 0) return BigRational(0);
  const std::size_t c0 = (n - c1) / 2;
  const std::size_t c2 = (m - c1) / 2;
  const BigInt binom = fact[N] / (fact[n] * fact[m]);
  const BigInt numerator = (BigInt(1) << c1) * fact[N / 2];
  const BigInt denominator = binom * fact[c0] * fact[c1] * fact[c2];
  return BigRational(numerator, denominator);
}

}  // namespace

const BigRational& NullDistribution::cdf_at(std::size_t c) const {
  const auto it = std::find(support.begin(), support.end(), c);
  if (it == support.end())
    throw std::invalid_argument("observed cross-match count " +
                                std::to_string(c) +
                                " is outside the null support");
  return cdf[static_cast<std::size_t>(it - support.begin())];
}

BigRational null_pmf(std::size_t n, std::size_t m, std::size_t c1) {
  check_group_sizes(n, m);
  return pmf_term(factorial_table(n + m), n, m, c1);
}

NullDistribution null_distribution(std::size_t n, std::size_t m) {
  check_group_sizes(n, m);
  const auto fact = factorial_table(n + m);

  NullDistribution dist;
  dist.n = n;
  dist.m = m;
  BigRational running(0);
  for (std::size_t c = (n % 2 == 0) ? 0 : 1; c <= std::min(n, m); c += 2) {
    dist.support.push_back(c);
    dist.pmf.push_back(pmf_term(fact, n, m, c));
    running += dist.pmf.back();
    dist.cdf.push_back(running);
  }
  if (running != 1)
    throw std::logic_error("null pmf does not sum to 1 exactly");
  return dist;
}

BigRational p_value(std::size_t n, std::size_t m, std::size_t observed_c1) {
  return null_distribution(n, m).cdf_at(observed_c1);
}

double expected_cross_matches(std::size_t n, std::size_t m) {
  check_group_sizes(n, m);
  const auto fact = factorial_table(n + m);
  BigRational mean(0);
  for (std::size_t c = (n % 2 == 0) ? 0 : 1; c <= std::min(n, m); c += 2)
    mean += BigRational(c) * pmf_term(fact, n, m, c);
  return mean.convert_to<double>();
}

double log_null_pmf(std::size_t n, std::size_t m, std::size_t c1) {
  check_group_sizes(n, m);
  if (c1 > std::min(n, m) || (n - c1) % 2 != 0)
    return -std::numeric_limits<double>::infinity();
  const auto N = static_cast<double>(n + m);
  const auto c0 = static_cast<double>((n - c1) / 2);
  const auto c2 = static_cast<double>((m - c1) / 2);
  const auto cc = static_cast<double>(c1);
  const double log_binom = std::lgamma(N + 1) -
                           std::lgamma(static_cast<double>(n) + 1) -
                           std::lgamma(static_cast<double>(m) + 1);
  return cc * std::log(2.0) + std::lgamma(N / 2 + 1) - log_binom -
         std::lgamma(c0 + 1) - std::lgamma(cc + 1) - std::lgamma(c2 + 1);
}

double p_value_log_space(std::size_t n, std::size_t m,
                         std::size_t observed_c1) {
  check_group_sizes(n, m);
  if (observed_c1 > std::min(n, m) || (n - observed_c1) % 2 != 0)
    throw std::invalid_argument("observed cross-match count is outside the null support");
  // log-sum-exp over the support points <= observed.
  std::vector<double> logs;
  for (std::size_t c = (n % 2 == 0) ? 0 : 1; c <= observed_c1; c += 2)
    logs.push_back(log_null_pmf(n, m, c));
  const double peak = *std::max_element(logs.begin(), logs.end());
  double acc = 0.0;
  for (const double lg : logs) acc += std::exp(lg - peak);
  return std::exp(peak + std::log(acc));
}

TestResult run_cross_match_test(const PooledSample& sample, Metric metric,
                                MatchMode mode,
                                const NullDistribution* shared_null) {
  const DistanceMatrix dm = build_distance_matrix(sample, metric);
  const auto match = [&](const DistanceMatrix& matrix) {
    return mode == MatchMode::exact ? min_weight_perfect_matching(matrix)
                                    : greedy_matching(matrix);
  };

  TestResult result;
  result.metric = metric;
  result.exact = (mode == MatchMode::exact);

  Matching matching;
  if (sample.size() % 2 != 0) {
    const PaddedMatrix padded = pad_odd(dm);
    const Matching full = match(padded.matrix);
    for (const auto& [k, l] : full.pairs) {
      if (k == padded.pseudo_index || l == padded.pseudo_index) {
        result.discarded_point = (k == padded.pseudo_index) ? l : k;
        break;
      }
    }
    matching = discard_pair_containing(full, padded.pseudo_index, padded.matrix);
    result.padded = true;
  } else {
    matching = match(dm);
  }

  const PairTypeCounts counts = count_pair_types(matching, sample.labels());
  result.c0 = counts.c0;
  result.c1 = counts.c1;
  result.c2 = counts.c2;
  result.matching_weight = matching.weight;
  result.n = 2 * counts.c0 + counts.c1;
  result.m = 2 * counts.c2 + counts.c1;

  if (shared_null && shared_null->n == result.n && shared_null->m == result.m) {
    result.p_exact = shared_null->cdf_at(result.c1);
  } else {
    result.p_exact = p_value(result.n, result.m, result.c1);
  }
  result.p_value = result.p_exact.convert_to<double>();
  return result;
}

}  // namespace crossmatch
