#include "crossmatch/matching.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace crossmatch {

namespace {

// ---------------------------------------------------------------------------
// Maximum-weight matching on a general graph (Galil's primal-dual blossom
// method, following Van Rantwijk's well-known formulation). Vertex duals,
// edge slacks and deltas are pre-multiplied by two. With max_cardinality
// set, the result is a maximum-cardinality matching of maximum weight,
// which on a complete even graph is a perfect matching.
// ---------------------------------------------------------------------------
class BlossomMatcher {
public:
  BlossomMatcher(std::size_t nvertex,
                 std::vector<int> edge_i, std::vector<int> edge_j,
                 std::vector<double> edge_w)
      : nvertex_(static_cast<int>(nvertex)),
        ei_(std::move(edge_i)),
        ej_(std::move(edge_j)),
        ew_(std::move(edge_w)) {
    nedge_ = static_cast<int>(ei_.size());
    max_weight_ = 0.0;
    for (double w : ew_) max_weight_ = std::max(max_weight_, w);

    // endpoint[p] is the vertex to which edge endpoint p is attached;
    // endpoints 2k and 2k+1 belong to edge k.
    endpoint_.resize(2 * nedge_);
    for (int k = 0; k < nedge_; ++k) {
      endpoint_[2 * k] = ei_[k];
      endpoint_[2 * k + 1] = ej_[k];
    }
    neighb_end_.resize(nvertex_);
    for (int k = 0; k < nedge_; ++k) {
      neighb_end_[ei_[k]].push_back(2 * k + 1);
      neighb_end_[ej_[k]].push_back(2 * k);
    }

    mate_.assign(nvertex_, -1);
    label_.assign(2 * nvertex_, 0);
    label_end_.assign(2 * nvertex_, -1);
    in_blossom_.resize(nvertex_);
    std::iota(in_blossom_.begin(), in_blossom_.end(), 0);
    blossom_parent_.assign(2 * nvertex_, -1);
    blossom_childs_.assign(2 * nvertex_, {});
    blossom_base_.resize(2 * nvertex_, -1);
    std::iota(blossom_base_.begin(), blossom_base_.begin() + nvertex_, 0);
    std::fill(blossom_base_.begin() + nvertex_, blossom_base_.end(), -1);
    blossom_endps_.assign(2 * nvertex_, {});
    best_edge_.assign(2 * nvertex_, -1);
    blossom_best_edges_.assign(2 * nvertex_, {});
    has_best_edges_.assign(2 * nvertex_, false);
    unused_blossoms_.resize(nvertex_);
    std::iota(unused_blossoms_.begin(), unused_blossoms_.end(), nvertex_);
    dual_var_.assign(2 * nvertex_, 0.0);
    std::fill(dual_var_.begin(), dual_var_.begin() + nvertex_, max_weight_);
    allow_edge_.assign(nedge_, false);
  }

  /// Runs the matcher; mate[v] is the partner vertex of v, or -1.
  std::vector<int> solve(bool max_cardinality) {
    if (nedge_ == 0) return mate_;

    for (int stage = 0; stage < nvertex_; ++stage) {
      // Each stage finds an augmenting path and uses it to improve the
      // matching.
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(best_edge_.begin(), best_edge_.end(), -1);
      for (int b = nvertex_; b < 2 * nvertex_; ++b) {
        blossom_best_edges_[b].clear();
        has_best_edges_[b] = false;
      }
      std::fill(allow_edge_.begin(), allow_edge_.end(), false);
      queue_.clear();

      // Label single blossoms/vertices with S and put them in the queue.
      for (int v = 0; v < nvertex_; ++v)
        if (mate_[v] == -1 && label_[in_blossom_[v]] == 0)
          assign_label(v, 1, -1);

      bool augmented = false;
      while (true) {
        // Substage: try to find an augmenting path; if none, pump slack
        // out of the dual variables.
        while (!queue_.empty() && !augmented) {
          const int v = queue_.back();
          queue_.pop_back();
          assert(label_[in_blossom_[v]] == 1);

          for (const int p : neighb_end_[v]) {
            const int k = p / 2;
            const int w = endpoint_[p];
            if (in_blossom_[v] == in_blossom_[w])
              continue;  // edge internal to a blossom
            double kslack = 0.0;
            if (!allow_edge_[k]) {
              kslack = slack(k);
              if (kslack <= 0.0) allow_edge_[k] = true;
            }
            if (allow_edge_[k]) {
              if (label_[in_blossom_[w]] == 0) {
                // w is free; label it T and its mate S.
                assign_label(w, 2, p ^ 1);
              } else if (label_[in_blossom_[w]] == 1) {
                // Two S-sides meet: either a new blossom or an
                // augmenting path.
                const int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[w] == 0) {
                // w sits inside a T-blossom but was not yet reached
                // from outside; remember the entry edge for expansion.
                assert(label_[in_blossom_[w]] == 2);
                label_[w] = 2;
                label_end_[w] = p ^ 1;
              }
            } else if (label_[in_blossom_[w]] == 1) {
              const int b = in_blossom_[v];
              if (best_edge_[b] == -1 || kslack < slack(best_edge_[b]))
                best_edge_[b] = k;
            } else if (label_[w] == 0) {
              if (best_edge_[w] == -1 || kslack < slack(best_edge_[w]))
                best_edge_[w] = k;
            }
          }
        }
        if (augmented) break;

        // No augmenting path under the current duals; compute delta.
        int delta_type = -1;
        double delta = 0.0;
        int delta_edge = -1;
        int delta_blossom = -1;

        if (!max_cardinality) {
          delta_type = 1;
          delta = *std::min_element(dual_var_.begin(),
                                    dual_var_.begin() + nvertex_);
        }
        // delta2: least slack from an S-vertex to a free vertex.
        for (int v = 0; v < nvertex_; ++v) {
          if (label_[in_blossom_[v]] == 0 && best_edge_[v] != -1) {
            const double d = slack(best_edge_[v]);
            if (delta_type == -1 || d < delta) {
              delta = d;
              delta_type = 2;
              delta_edge = best_edge_[v];
            }
          }
        }
        // delta3: half the least slack between two S-blossoms.
        for (int b = 0; b < 2 * nvertex_; ++b) {
          if (blossom_parent_[b] == -1 && label_[b] == 1 &&
              best_edge_[b] != -1) {
            const double d = slack(best_edge_[b]) / 2.0;
            if (delta_type == -1 || d < delta) {
              delta = d;
              delta_type = 3;
              delta_edge = best_edge_[b];
            }
          }
        }
        // delta4: least dual of a T-blossom.
        for (int b = nvertex_; b < 2 * nvertex_; ++b) {
          if (blossom_base_[b] >= 0 && blossom_parent_[b] == -1 &&
              label_[b] == 2 && (delta_type == -1 || dual_var_[b] < delta)) {
            delta = dual_var_[b];
            delta_type = 4;
            delta_blossom = b;
          }
        }
        if (delta_type == -1) {
          // No further improvement possible; max-cardinality optimum.
          assert(max_cardinality);
          delta_type = 1;
          delta = std::max(0.0, *std::min_element(dual_var_.begin(),
                                                  dual_var_.begin() + nvertex_));
        }

        // Update duals.
        for (int v = 0; v < nvertex_; ++v) {
          if (label_[in_blossom_[v]] == 1)
            dual_var_[v] -= delta;
          else if (label_[in_blossom_[v]] == 2)
            dual_var_[v] += delta;
        }
        for (int b = nvertex_; b < 2 * nvertex_; ++b) {
          if (blossom_base_[b] >= 0 && blossom_parent_[b] == -1) {
            if (label_[b] == 1)
              dual_var_[b] += delta;
            else if (label_[b] == 2)
              dual_var_[b] -= delta;
          }
        }

        if (delta_type == 1) {
          break;  // optimum reached
        } else if (delta_type == 2) {
          allow_edge_[delta_edge] = true;
          int i = ei_[delta_edge];
          if (label_[in_blossom_[i]] == 0) i = ej_[delta_edge];
          assert(label_[in_blossom_[i]] == 1);
          queue_.push_back(i);
        } else if (delta_type == 3) {
          allow_edge_[delta_edge] = true;
          assert(label_[in_blossom_[ei_[delta_edge]]] == 1);
          queue_.push_back(ei_[delta_edge]);
        } else {
          expand_blossom(delta_blossom, false);
        }
      }

      if (!augmented) break;

      // End of stage: expand S-blossoms whose dual reached zero.
      for (int b = nvertex_; b < 2 * nvertex_; ++b)
        if (blossom_parent_[b] == -1 && blossom_base_[b] >= 0 &&
            label_[b] == 1 && dual_var_[b] == 0.0)
          expand_blossom(b, true);
    }

    // Rewrite mate[] from remote endpoints to partner vertices.
    std::vector<int> result(mate_);
    for (int v = 0; v < nvertex_; ++v)
      if (result[v] >= 0) result[v] = endpoint_[result[v]];
    return result;
  }

private:
  // Python-style wrap-around indexing; j may be negative (one wrap).
  static int wrapped(const std::vector<int>& v, int j) {
    const int n = static_cast<int>(v.size());
    return v[j < 0 ? j + n : j];
  }

  double slack(int k) const {
    return dual_var_[ei_[k]] + dual_var_[ej_[k]] - 2.0 * ew_[k];
  }

  // Leaf vertices of blossom b, depth first in child order.
  void collect_leaves(int b, std::vector<int>& out) const {
    if (b < nvertex_) {
      out.push_back(b);
      return;
    }
    for (const int t : blossom_childs_[b]) collect_leaves(t, out);
  }
  std::vector<int> blossom_leaves(int b) const {
    std::vector<int> out;
    collect_leaves(b, out);
    return out;
  }

  // Label the top-level blossom containing w with t; p is the remote
  // endpoint of the edge through which w was reached.
  void assign_label(int w, int t, int p) {
    const int b = in_blossom_[w];
    assert(label_[w] == 0 && label_[b] == 0);
    label_[w] = label_[b] = t;
    label_end_[w] = label_end_[b] = p;
    best_edge_[w] = best_edge_[b] = -1;
    if (t == 1) {
      // S-blossom: queue all its vertices.
      for (const int v : blossom_leaves(b)) queue_.push_back(v);
    } else if (t == 2) {
      // T-blossom: its base's mate becomes an S-vertex.
      const int base = blossom_base_[b];
      assert(mate_[base] >= 0);
      assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  // Trace back from v and w; returns the base of a new blossom, or -1 if
  // the paths lead to different roots (an augmenting path).
  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = in_blossom_[v];
      if (label_[b] & 4) {
        base = blossom_base_[b];
        break;
      }
      assert(label_[b] == 1);
      path.push_back(b);
      label_[b] = 5;  // breadcrumb
      assert(label_end_[b] == mate_[blossom_base_[b]]);
      if (label_end_[b] == -1) {
        v = -1;  // single vertex, path ends
      } else {
        v = endpoint_[label_end_[b]];
        b = in_blossom_[v];
        assert(label_[b] == 2);
        assert(label_end_[b] >= 0);
        v = endpoint_[label_end_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (const int b : path) label_[b] = 1;
    return base;
  }

  // Construct a new S-blossom with the given base, closed by edge k.
  void add_blossom(int base, int k) {
    int v = ei_[k];
    int w = ej_[k];
    const int bb = in_blossom_[base];
    int bv = in_blossom_[v];
    int bw = in_blossom_[w];
    const int b = unused_blossoms_.back();
    unused_blossoms_.pop_back();
    blossom_base_[b] = base;
    blossom_parent_[b] = -1;
    blossom_parent_[bb] = b;
    auto& path = blossom_childs_[b];
    auto& endps = blossom_endps_[b];
    path.clear();
    endps.clear();
    // Trace from v back to the base.
    while (bv != bb) {
      blossom_parent_[bv] = b;
      path.push_back(bv);
      endps.push_back(label_end_[bv]);
      assert(label_[bv] == 2 ||
             (label_[bv] == 1 && label_end_[bv] == mate_[blossom_base_[bv]]));
      assert(label_end_[bv] >= 0);
      v = endpoint_[label_end_[bv]];
      bv = in_blossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    // Trace from w back to the base.
    while (bw != bb) {
      blossom_parent_[bw] = b;
      path.push_back(bw);
      endps.push_back(label_end_[bw] ^ 1);
      assert(label_[bw] == 2 ||
             (label_[bw] == 1 && label_end_[bw] == mate_[blossom_base_[bw]]));
      assert(label_end_[bw] >= 0);
      w = endpoint_[label_end_[bw]];
      bw = in_blossom_[w];
    }
    assert(label_[bb] == 1);
    label_[b] = 1;
    label_end_[b] = label_end_[bb];
    dual_var_[b] = 0.0;
    // Former T-vertices become S-vertices; queue them.
    for (const int leaf : blossom_leaves(b)) {
      if (label_[in_blossom_[leaf]] == 2) queue_.push_back(leaf);
      in_blossom_[leaf] = b;
    }
    // Merge least-slack edge lists of the sub-blossoms.
    std::vector<int> best_edge_to(2 * nvertex_, -1);
    for (const int child : path) {
      if (!has_best_edges_[child]) {
        for (const int leaf : blossom_leaves(child)) {
          for (const int p : neighb_end_[leaf])
            consider_best_edge(best_edge_to, b, p / 2);
        }
      } else {
        for (const int e : blossom_best_edges_[child])
          consider_best_edge(best_edge_to, b, e);
      }
      blossom_best_edges_[child].clear();
      has_best_edges_[child] = false;
      best_edge_[child] = -1;
    }
    blossom_best_edges_[b].clear();
    for (const int e : best_edge_to)
      if (e != -1) blossom_best_edges_[b].push_back(e);
    has_best_edges_[b] = true;
    best_edge_[b] = -1;
    for (const int e : blossom_best_edges_[b])
      if (best_edge_[b] == -1 || slack(e) < slack(best_edge_[b]))
        best_edge_[b] = e;
  }

  void consider_best_edge(std::vector<int>& best_edge_to, int b, int k) {
    int i = ei_[k];
    int j = ej_[k];
    if (in_blossom_[j] == b) std::swap(i, j);
    const int bj = in_blossom_[j];
    if (bj != b && label_[bj] == 1 &&
        (best_edge_to[bj] == -1 || slack(k) < slack(best_edge_to[bj])))
      best_edge_to[bj] = k;
  }

  // Expand the given top-level blossom.
  void expand_blossom(int b, bool endstage) {
    for (const int s : blossom_childs_[b]) {
      blossom_parent_[s] = -1;
      if (s < nvertex_) {
        in_blossom_[s] = s;
      } else if (endstage && dual_var_[s] == 0.0) {
        expand_blossom(s, endstage);
      } else {
        for (const int leaf : blossom_leaves(s)) in_blossom_[leaf] = s;
      }
    }
    // A T-blossom expanded during a stage must relabel its sub-blossoms.
    if (!endstage && label_[b] == 2) {
      assert(label_end_[b] >= 0);
      const int entry_child = in_blossom_[endpoint_[label_end_[b] ^ 1]];
      const auto& childs = blossom_childs_[b];
      const auto& endps = blossom_endps_[b];
      int j = static_cast<int>(std::find(childs.begin(), childs.end(),
                                         entry_child) -
                               childs.begin());
      int jstep, endptrick;
      if (j & 1) {
        j -= static_cast<int>(childs.size());
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      // Walk from the entry sub-blossom to the base, alternating T and S
      // labels along the way.
      int p = label_end_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[wrapped(endps, j - endptrick) ^ endptrick ^ 1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allow_edge_[wrapped(endps, j - endptrick) / 2] = true;
        j += jstep;
        p = wrapped(endps, j - endptrick) ^ endptrick;
        allow_edge_[p / 2] = true;
        j += jstep;
      }
      // Relabel the base sub-blossom without stepping through to its mate.
      const int bv = wrapped(childs, j);
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      label_end_[endpoint_[p ^ 1]] = label_end_[bv] = p;
      best_edge_[bv] = -1;
      // The remaining sub-blossoms keep label 0 unless reachable from
      // outside the expanding blossom.
      j += jstep;
      while (wrapped(childs, j) != entry_child) {
        const int bw = wrapped(childs, j);
        if (label_[bw] == 1) {
          j += jstep;
          continue;
        }
        int reached = -1;
        for (const int leaf : blossom_leaves(bw)) {
          reached = leaf;
          if (label_[leaf] != 0) break;
        }
        if (reached >= 0 && label_[reached] != 0) {
          assert(label_[reached] == 2);
          assert(in_blossom_[reached] == bw);
          label_[reached] = 0;
          label_[endpoint_[mate_[blossom_base_[bw]]]] = 0;
          assign_label(reached, 2, label_end_[reached]);
        }
        j += jstep;
      }
    }
    // Recycle the blossom number.
    label_[b] = -1;
    label_end_[b] = -1;
    blossom_childs_[b].clear();
    blossom_endps_[b].clear();
    blossom_base_[b] = -1;
    blossom_best_edges_[b].clear();
    has_best_edges_[b] = false;
    best_edge_[b] = -1;
    unused_blossoms_.push_back(b);
  }

  // Swap matched/unmatched edges over the alternating path through
  // blossom b between vertex v and the base vertex.
  void augment_blossom(int b, int v) {
    int t = v;
    while (blossom_parent_[t] != b) t = blossom_parent_[t];
    if (t >= nvertex_) augment_blossom(t, v);
    auto& childs = blossom_childs_[b];
    auto& endps = blossom_endps_[b];
    const int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) -
                                   childs.begin());
    int j = i;
    int jstep, endptrick;
    if (i & 1) {
      j -= static_cast<int>(childs.size());
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = wrapped(childs, j);
      const int p = wrapped(endps, j - endptrick) ^ endptrick;
      if (t >= nvertex_) augment_blossom(t, endpoint_[p]);
      j += jstep;
      t = wrapped(childs, j);
      if (t >= nvertex_) augment_blossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    // Rotate the child list so the new base is in front.
    std::rotate(childs.begin(), childs.begin() + i, childs.end());
    std::rotate(endps.begin(), endps.begin() + i, endps.end());
    blossom_base_[b] = blossom_base_[childs[0]];
    assert(blossom_base_[b] == v);
  }

  // Swap matched/unmatched edges over the augmenting path through edge k.
  void augment_matching(int k) {
    const int v = ei_[k];
    const int w = ej_[k];
    const std::pair<int, int> starts[2] = {{v, 2 * k + 1}, {w, 2 * k}};
    for (const auto& [s0, p0] : starts) {
      int s = s0;
      int p = p0;
      while (true) {
        const int bs = in_blossom_[s];
        assert(label_[bs] == 1);
        assert(label_end_[bs] == mate_[blossom_base_[bs]]);
        if (bs >= nvertex_) augment_blossom(bs, s);
        mate_[s] = p;
        if (label_end_[bs] == -1) break;  // reached a single vertex
        const int t = endpoint_[label_end_[bs]];
        const int bt = in_blossom_[t];
        assert(label_[bt] == 2);
        assert(label_end_[bt] >= 0);
        s = endpoint_[label_end_[bt]];
        const int j = endpoint_[label_end_[bt] ^ 1];
        assert(blossom_base_[bt] == t);
        if (bt >= nvertex_) augment_blossom(bt, j);
        mate_[j] = label_end_[bt];
        p = label_end_[bt] ^ 1;
      }
    }
  }

  int nvertex_ = 0;
  int nedge_ = 0;
  double max_weight_ = 0.0;
  std::vector<int> ei_, ej_;
  std::vector<double> ew_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighb_end_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> label_end_;
  std::vector<int> in_blossom_;
  std::vector<int> blossom_parent_;
  std::vector<std::vector<int>> blossom_childs_;
  std::vector<int> blossom_base_;
  std::vector<std::vector<int>> blossom_endps_;
  std::vector<int> best_edge_;
  std::vector<std::vector<int>> blossom_best_edges_;
  std::vector<char> has_best_edges_;
  std::vector<int> unused_blossoms_;
  std::vector<double> dual_var_;
  std::vector<char> allow_edge_;
  std::vector<int> queue_;
};

Matching matching_from_mate(const std::vector<int>& mate,
                            const DistanceMatrix& dm) {
  Matching result;
  for (std::size_t k = 0; k < mate.size(); ++k) {
    const int partner = mate[k];
    if (partner < 0)
      throw std::logic_error("matching is not perfect");
    if (static_cast<std::size_t>(partner) > k) {
      result.pairs.emplace_back(k, static_cast<std::size_t>(partner));
      result.weight += dm(k, static_cast<std::size_t>(partner));
    }
  }
  return result;
}

void require_even(const DistanceMatrix& dm) {
  if (dm.size() < 2)
    throw std::invalid_argument("matching needs at least two points");
  if (dm.size() % 2 != 0)
    throw std::invalid_argument("matrix size is odd; apply pad_odd first");
}

}  // namespace

Matching min_weight_perfect_matching(const DistanceMatrix& dm) {
  require_even(dm);
  const std::size_t n = dm.size();
  // Minimizing total distance equals maximizing total (max_entry - d)
  // over matchings of fixed cardinality N/2.
  const double mx = dm.max_entry();
  std::vector<int> ei, ej;
  std::vector<double> ew;
  ei.reserve(n * (n - 1) / 2);
  ej.reserve(n * (n - 1) / 2);
  ew.reserve(n * (n - 1) / 2);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      ei.push_back(static_cast<int>(k));
      ej.push_back(static_cast<int>(l));
      ew.push_back(mx - dm(k, l));
    }
  }
  BlossomMatcher matcher(n, std::move(ei), std::move(ej), std::move(ew));
  return matching_from_mate(matcher.solve(/*max_cardinality=*/true), dm);
}

BruteForceOutcome brute_force_matching_detailed(const DistanceMatrix& dm,
                                                double tie_rel_tol) {
  require_even(dm);
  if (dm.size() > 12)
    throw std::invalid_argument(
        "brute-force enumeration is limited to 12 points");
  const std::size_t n = dm.size();

  BruteForceOutcome out;
  std::vector<std::pair<std::size_t, std::size_t>> current;
  std::vector<char> used(n, false);
  std::vector<double> weights;  // every enumerated matching's weight

  // Pairs the lowest unused index with each candidate partner in turn;
  // enumeration order is lexicographic in the resulting pair lists.
  auto recurse = [&](auto&& self, double acc) -> void {
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i]) {
        first = i;
        break;
      }
    }
    if (first == n) {
      weights.push_back(acc);
      if (out.matching.pairs.empty() || acc < out.matching.weight) {
        out.matching.pairs = current;
        out.matching.weight = acc;
      }
      return;
    }
    used[first] = true;
    for (std::size_t j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      current.emplace_back(first, j);
      self(self, acc + dm(first, j));
      current.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  recurse(recurse, 0.0);

  out.enumerated = weights.size();
  const double tol = tie_rel_tol * std::max(1.0, std::abs(out.matching.weight));
  std::size_t near_optimal = 0;
  for (const double w : weights)
    if (std::abs(w - out.matching.weight) <= tol) ++near_optimal;
  out.tie_at_optimum = near_optimal > 1;
  return out;
}

Matching brute_force_matching(const DistanceMatrix& dm) {
  return brute_force_matching_detailed(dm).matching;
}

Matching greedy_matching(const DistanceMatrix& dm) {
  require_even(dm);
  const std::size_t n = dm.size();
  struct Candidate {
    double d;
    std::size_t k, l;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(n * (n - 1) / 2);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l)
      candidates.push_back({dm(k, l), k, l});
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.d != b.d) return a.d < b.d;
              if (a.k != b.k) return a.k < b.k;
              return a.l < b.l;
            });

  Matching result;
  std::vector<char> used(n, false);
  std::size_t matched = 0;
  for (const auto& c : candidates) {
    if (used[c.k] || used[c.l]) continue;
    used[c.k] = used[c.l] = true;
    result.pairs.emplace_back(c.k, c.l);
    result.weight += c.d;
    if ((matched += 2) == n) break;
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  return result;
}

PaddedMatrix pad_odd(const DistanceMatrix& dm) {
  if (dm.size() % 2 == 0)
    throw std::invalid_argument("pad_odd requires an odd-size matrix");
  const std::size_t n = dm.size();
  const std::size_t padded = n + 1;
  std::vector<double> entries(padded * padded, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      entries[k * padded + l] = dm(k, l);
  // New row/column stays zero: the pseudo-point sits at zero distance
  // from everyone else.
  return PaddedMatrix{DistanceMatrix(padded, std::move(entries)),
                      /*pseudo_index=*/n};
}

Matching discard_pair_containing(const Matching& matching, std::size_t index,
                                 const DistanceMatrix& dm) {
  Matching out;
  bool found = false;
  for (const auto& [k, l] : matching.pairs) {
    if (k == index || l == index) {
      found = true;
      continue;
    }
    out.pairs.emplace_back(k, l);
    out.weight += dm(k, l);
  }
  if (!found)
    throw std::invalid_argument("no pair contains the given index");
  return out;
}

PairTypeCounts count_pair_types(const Matching& matching,
                                const std::vector<int>& labels) {
  std::vector<char> seen(labels.size(), false);
  PairTypeCounts counts;
  for (const auto& [k, l] : matching.pairs) {
    if (k >= labels.size() || l >= labels.size())
      throw std::invalid_argument("matching index out of label range");
    if (seen[k] || seen[l])
      throw std::invalid_argument("matching repeats an index");
    seen[k] = seen[l] = true;
    const int sum = labels[k] + labels[l];
    if (sum == 0)
      ++counts.c0;
    else if (sum == 1)
      ++counts.c1;
    else
      ++counts.c2;
  }
  return counts;
}

}  // namespace crossmatch
