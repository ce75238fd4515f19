#ifndef CROSSMATCH_MATCHING_HPP
#define CROSSMATCH_MATCHING_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "crossmatch/core.hpp"

namespace crossmatch {

/// A perfect pairing of point indices. Each pair is stored (k, l) with
/// k < l and the list is sorted by k; weight is the sum of the matrix
/// entries of the pairs.
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  double weight = 0.0;
};

/// Counts of matched pairs by label combination: c0 = (0,0) pairs,
/// c1 = mixed pairs (the cross-match statistic), c2 = (1,1) pairs.
struct PairTypeCounts {
  std::size_t c0 = 0;
  std::size_t c1 = 0;
  std::size_t c2 = 0;
};

/// Exact minimum-weight perfect matching of the complete graph described
/// by `dm`, via a blossom-style primal-dual algorithm (O(N^3) worst case).
/// Deterministic: identical input yields the identical pairing.
/// Throws std::invalid_argument for odd size or size < 2.
Matching min_weight_perfect_matching(const DistanceMatrix& dm);

/// Test oracle: enumerates all (N-1)!! perfect matchings and returns a
/// minimum-weight one (the first minimum in enumeration order, which is
/// lexicographic in the pair lists). Limited to dm.size() <= 12.
Matching brute_force_matching(const DistanceMatrix& dm);

/// Oracle variant that also reports whether a different pairing ties the
/// optimum within relative tolerance `tie_rel_tol` (such instances are
/// excluded from pairing-equality assertions in tests).
struct BruteForceOutcome {
  Matching matching;
  bool tie_at_optimum = false;
  std::size_t enumerated = 0;
};
BruteForceOutcome brute_force_matching_detailed(const DistanceMatrix& dm,
                                                double tie_rel_tol = 1e-9);

/// Approximate mode: repeatedly pairs the two closest unmatched indices.
/// Weight is always >= the exact optimum; results using it are flagged
/// as not exact downstream.
Matching greedy_matching(const DistanceMatrix& dm);

/// Result of padding an odd-size matrix with a pseudo-point at zero
/// distance from everyone else. The pair containing pseudo_index must be
/// discarded after matching, which drops the least matchable real point.
struct PaddedMatrix {
  DistanceMatrix matrix;
  std::size_t pseudo_index;
};

/// Appends the zero-distance pseudo-point row/column. Input size must be odd.
PaddedMatrix pad_odd(const DistanceMatrix& dm);

/// Removes the pair containing `index` (the pseudo-point) from `matching`,
/// subtracting that pair's weight as given by `dm`.
Matching discard_pair_containing(const Matching& matching, std::size_t index,
                                 const DistanceMatrix& dm);

/// Tallies pair label types. `labels` holds the group tag of every real
/// point; the matching must reference only valid indices, each at most
/// once (pairs dropped by the odd-N rule are simply absent).
PairTypeCounts count_pair_types(const Matching& matching,
                                const std::vector<int>& labels);

}  // namespace crossmatch

#endif  // CROSSMATCH_MATCHING_HPP
