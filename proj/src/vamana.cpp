// Copyright 2026 The topolayout Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "topolayout/vamana.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <type_traits>

#include "topolayout/error.hpp"
#include "topolayout/union_find.hpp"

namespace topolayout {

void VamanaParams::validate() const {
  if (!(alpha >= 1.0) || !std::isfinite(alpha)) {
    throw Error(ErrorKind::kInvalidArgument, "alpha must be a finite value >= 1");
  }
  if (R < 1) throw Error(ErrorKind::kInvalidArgument, "R must be >= 1");
  if (L < R) throw Error(ErrorKind::kInvalidArgument, "L must be >= R");
  if (passes < 1) throw Error(ErrorKind::kInvalidArgument, "passes must be >= 1");
}

namespace {

// Internally every distance is squared; ordering is identical and the
// pruning rule compares alpha^2 * d^2(p*, v) <= d^2(center, v).
struct Scratch {
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;

  void reset(std::size_t n) {
    if (stamp.size() != n) {
      stamp.assign(n, 0);
      epoch = 0;
    }
    if (++epoch == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
  }
  bool mark(PointId v) {
    if (stamp[v] == epoch) return false;
    stamp[v] = epoch;
    return true;
  }
};

inline void prefetch_bytes(const void* p, std::size_t bytes) {
  const char* c = static_cast<const char*>(p);
  for (std::size_t off = 0; off < bytes; off += 64) __builtin_prefetch(c + off);
}

// Double precision rows of the input; used by the public search and prune.
struct ExactMetric {
  using value_type = double;
  const PointSet* points;

  const double* row(PointId v) const { return points->row_ptr(v); }
  void prefetch(PointId v) const { prefetch_bytes(row(v), points->dim() * sizeof(double)); }
  double operator()(const double* a, const double* b) const {
    return detail::squared_distance(a, b, points->dim());
  }
};

// Single precision copy padded to 8 lanes; the graph only ranks candidates,
// AMST edge weights are recomputed in double precision.
struct BuildMetric {
  using value_type = float;
  std::vector<float> data;
  std::size_t stride = 0;

  explicit BuildMetric(const PointSet& points)
      : stride((points.dim() + 7) / 8 * 8) {
    data.assign(points.size() * stride, 0.0f);
    for (std::size_t v = 0; v < points.size(); ++v) {
      const double* src = points.row_ptr(static_cast<PointId>(v));
      for (std::size_t k = 0; k < points.dim(); ++k) {
        data[v * stride + k] = static_cast<float>(src[k]);
      }
    }
  }
  const float* row(PointId v) const { return data.data() + v * stride; }
  void prefetch(PointId v) const { prefetch_bytes(row(v), stride * sizeof(float)); }
  float operator()(const float* a, const float* b) const {
    return detail::squared_distance_padded(a, b, stride);
  }
};

template <typename T>
struct Scored {
  T dist;
  PointId id;
  bool clean;  // member of a list already pruned at the current alpha

  friend bool operator<(const Scored& a, const Scored& b) noexcept {
    return a.dist < b.dist || (a.dist == b.dist && a.id < b.id);
  }
};

template <typename T>
struct PoolEntry {
  PointId id;
  T dist;
  bool expanded;
};

// Sorted, bounded candidate list for the beam search.
template <typename T>
class SearchPool {
 public:
  void reset(std::size_t capacity) {
    capacity_ = capacity;
    cursor_ = 0;
    entries_.clear();
    entries_.reserve(capacity + 1);
  }

  void insert(PointId id, T dist) {
    auto before = [&](const PoolEntry<T>& e) {
      return e.dist < dist || (e.dist == dist && e.id < id);
    };
    if (entries_.size() == capacity_ && before(entries_.back())) return;
    // Branch-free lower bound; the outcome of each probe is unpredictable.
    std::size_t base = 0;
    std::size_t len = entries_.size();
    while (len > 1) {
      const std::size_t half = len / 2;
      base = before(entries_[base + half]) ? base + half : base;
      len -= half;
    }
    const std::size_t idx = base + (len == 1 && before(entries_[base]) ? 1 : 0);
    entries_.insert(entries_.begin() + static_cast<std::ptrdiff_t>(idx),
                    PoolEntry<T>{id, dist, false});
    if (entries_.size() > capacity_) entries_.pop_back();
    if (idx < cursor_) cursor_ = idx;
  }

  bool has_unexpanded() {
    while (cursor_ < entries_.size() && entries_[cursor_].expanded) ++cursor_;
    return cursor_ < entries_.size();
  }

  PoolEntry<T>& next() { return entries_[cursor_]; }
  const std::vector<PoolEntry<T>>& entries() const { return entries_; }

 private:
  std::size_t capacity_ = 0;
  std::size_t cursor_ = 0;
  std::vector<PoolEntry<T>> entries_;
};

using NeighborLocks = std::vector<std::mutex>;

std::unique_lock<std::mutex> lock_vertex(NeighborLocks* locks, PointId v) {
  if (locks == nullptr) return {};
  return std::unique_lock<std::mutex>((*locks)[v]);
}

// Squared-distance beam search; `visited` receives expanded vertices sorted
// by distance, `nearest` the k best kept ones.
template <typename T>
struct Buffers {
  SearchPool<T> pool;
  std::vector<PointId> frontier;
  std::vector<Scored<T>> visited, kept, fresh, merged;
  std::vector<std::size_t> kept_fresh;
};

template <typename Metric>
void beam_search(const Metric& metric, const VamanaGraph& graph,
                 const typename Metric::value_type* query, std::size_t L,
                 Scratch& scratch, Buffers<typename Metric::value_type>& buf,
                 std::vector<Scored<typename Metric::value_type>>& visited,
                 std::vector<Scored<typename Metric::value_type>>* nearest,
                 std::size_t k, NeighborLocks* locks) {
  using T = typename Metric::value_type;
  scratch.reset(graph.size());
  auto& pool = buf.pool;
  pool.reset(L);
  const PointId start = graph.medoid;
  scratch.mark(start);
  pool.insert(start, metric(query, metric.row(start)));

  auto& fresh = buf.frontier;
  while (pool.has_unexpanded()) {
    PoolEntry<T>& e = pool.next();
    e.expanded = true;
    visited.push_back(Scored<T>{e.dist, e.id, false});
    fresh.clear();
    {
      auto guard = lock_vertex(locks, e.id);
      for (PointId nb : graph.out_neighbors[e.id]) {
        if (scratch.mark(nb)) fresh.push_back(nb);
      }
    }
    // Issue every row load before computing, the search is latency bound.
    for (PointId nb : fresh) metric.prefetch(nb);
    for (PointId nb : fresh) pool.insert(nb, metric(query, metric.row(nb)));
  }
  std::sort(visited.begin(), visited.end());
  if (nearest) {
    for (const auto& entry : pool.entries()) {
      if (nearest->size() == k) break;
      nearest->push_back(Scored<T>{entry.dist, entry.id, false});
    }
  }
}

// Greedy alpha-dominance selection over candidates sorted by (dist, id).
// A candidate is kept iff no earlier kept candidate dominates it. Clean
// candidates came out of an earlier prune at the same alpha and so cannot
// dominate each other; they are only tested against kept non-clean ones.
template <typename Metric, typename T = typename Metric::value_type>
void prune_sorted(const Metric& metric,
                  std::span<const Scored<std::type_identity_t<T>>> candidates,
                  std::type_identity_t<T> alpha2, std::size_t R,
                  std::vector<Scored<T>>& kept, std::vector<std::size_t>& kept_fresh) {
  kept.clear();
  kept_fresh.clear();
  auto dominates = [&](const Scored<T>& by, const Scored<T>& c) {
    return alpha2 * metric(metric.row(by.id), metric.row(c.id)) <= c.dist;
  };
  for (const auto& c : candidates) {
    if (kept.size() == R) break;
    bool dominated = false;
    if (c.clean) {
      for (std::size_t idx : kept_fresh) {
        if (dominates(kept[idx], c)) {
          dominated = true;
          break;
        }
      }
    } else {
      for (const auto& s : kept) {
        if (dominates(s, c)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) kept_fresh.push_back(kept.size());
    }
    if (!dominated) kept.push_back(c);
  }
  for (auto& s : kept) s.clean = true;
}

class GraphBuilder {
 public:
  GraphBuilder(const PointSet& points, VamanaGraph& graph, bool locking)
      : metric_(points),
        graph_(graph),
        dist_(points.size()),
        clean_count_(points.size(), 0),
        clean_alpha_(points.size(), 0.0f) {
    if (locking) locks_ = std::make_unique<NeighborLocks>(points.size());
    for (PointId v = 0; v < graph_.size(); ++v) {
      const float* row = metric_.row(v);
      for (PointId u : graph_.out_neighbors[v]) {
        dist_[v].push_back(metric_(row, metric_.row(u)));
      }
    }
  }

  void insert_point(PointId p, float alpha, std::size_t R, std::size_t L,
                    Scratch& scratch, Buffers<float>& buf) {
    const float alpha2 = alpha * alpha;
    const float* row = metric_.row(p);
    auto& visited = buf.visited;
    visited.clear();
    beam_search(metric_, graph_, row, L, scratch, buf, visited, nullptr, 0,
                locks_.get());
    std::erase_if(visited, [&](const Scored<float>& c) { return c.id == p; });

    std::vector<Scored<float>> kept;
    prune_sorted(metric_, visited, alpha2, R, kept, buf.kept_fresh);
    {
      auto guard = lock_vertex(locks_.get(), p);
      store(p, kept, alpha);
    }

    auto& fresh = buf.fresh;
    auto& merged = buf.merged;
    for (const auto& nb : kept) {
      const PointId j = nb.id;
      auto guard = lock_vertex(locks_.get(), j);
      auto& list = graph_.out_neighbors[j];
      if (std::find(list.begin(), list.end(), p) != list.end()) continue;
      if (list.size() < R) {
        list.push_back(p);
        dist_[j].push_back(nb.dist);
        continue;
      }
      // The prefix of a pruned list is clean and sorted; everything appended
      // since then, plus p, is merged in as fresh candidates.
      const std::size_t clean = clean_alpha_[j] == alpha ? clean_count_[j] : 0;
      fresh.clear();
      for (std::size_t i = clean; i < list.size(); ++i) {
        fresh.push_back(Scored<float>{dist_[j][i], list[i], false});
      }
      fresh.push_back(Scored<float>{nb.dist, p, false});
      std::sort(fresh.begin(), fresh.end());
      merged.clear();
      std::size_t f = 0;
      for (std::size_t i = 0; i < clean; ++i) {
        const Scored<float> c{dist_[j][i], list[i], true};
        while (f < fresh.size() && fresh[f] < c) merged.push_back(fresh[f++]);
        merged.push_back(c);
      }
      merged.insert(merged.end(), fresh.begin() + static_cast<std::ptrdiff_t>(f),
                    fresh.end());
      prune_sorted(metric_, merged, alpha2, R, buf.kept, buf.kept_fresh);
      store(j, buf.kept, alpha);
    }
  }

 private:
  void store(PointId v, const std::vector<Scored<float>>& kept, float alpha) {
    auto& list = graph_.out_neighbors[v];
    list.clear();
    dist_[v].clear();
    for (const auto& s : kept) {
      list.push_back(s.id);
      dist_[v].push_back(s.dist);
    }
    clean_count_[v] = kept.size();
    clean_alpha_[v] = alpha;
  }

  BuildMetric metric_;
  VamanaGraph& graph_;
  std::vector<std::vector<float>> dist_;  // squared, parallel to out-lists
  std::vector<std::size_t> clean_count_;
  std::vector<float> clean_alpha_;
  std::unique_ptr<NeighborLocks> locks_;
};

PointId sampled_medoid(const PointSet& points, std::mt19937_64& rng) {
  const std::size_t n = points.size();
  const std::size_t sample_size = std::min<std::size_t>(n, 1000);
  std::vector<PointId> ids(n);
  std::iota(ids.begin(), ids.end(), PointId{0});
  for (std::size_t i = 0; i < sample_size; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(ids[i], ids[pick(rng)]);
  }
  ids.resize(sample_size);
  std::sort(ids.begin(), ids.end());

  PointId best = ids.front();
  double best_sum = std::numeric_limits<double>::infinity();
  for (PointId c : ids) {
    double sum = 0.0;
    for (PointId s : ids) sum += point_distance(points, c, s);
    if (sum < best_sum) {
      best_sum = sum;
      best = c;
    }
  }
  return best;
}

void random_regular_init(VamanaGraph& graph, std::size_t R, std::mt19937_64& rng) {
  const std::size_t n = graph.size();
  std::vector<std::uint32_t> seen(n, UINT32_MAX);
  std::uniform_int_distribution<PointId> pick(0, static_cast<PointId>(n - 1));
  for (PointId v = 0; v < n; ++v) {
    auto& list = graph.out_neighbors[v];
    list.clear();
    list.reserve(R);
    seen[v] = v;
    if (2 * R >= n) {
      std::vector<PointId> others;
      others.reserve(n - 1);
      for (PointId u = 0; u < n; ++u) {
        if (u != v) others.push_back(u);
      }
      std::shuffle(others.begin(), others.end(), rng);
      list.assign(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(R));
      continue;
    }
    while (list.size() < R) {
      const PointId u = pick(rng);
      if (seen[u] == v) continue;
      seen[u] = v;
      list.push_back(u);
    }
  }
}

}  // namespace

SearchResult greedy_search(const VamanaGraph& graph, const PointSet& points,
                           std::span<const double> query, std::size_t k,
                           std::size_t L) {
  if (graph.size() == 0) throw Error(ErrorKind::kEmptyInput, "graph is empty");
  if (graph.size() != points.size()) {
    throw Error(ErrorKind::kInvalidArgument, "graph and point set sizes differ");
  }
  if (query.size() != points.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "query dimension mismatch");
  }
  if (k > L) throw Error(ErrorKind::kInvalidArgument, "k must be <= L");

  Scratch scratch;
  Buffers<double> buf;
  std::vector<Scored<double>> visited, nearest;
  beam_search(ExactMetric{&points}, graph, query.data(), L, scratch, buf, visited,
              &nearest, k, nullptr);
  SearchResult result;
  for (const auto& s : nearest) {
    result.nearest.push_back(Neighbor{s.id, std::sqrt(s.dist)});
  }
  for (const auto& s : visited) {
    result.visited.push_back(Neighbor{s.id, std::sqrt(s.dist)});
  }
  return result;
}

std::vector<PointId> robust_prune(std::span<const Neighbor> candidates,
                                  double alpha, std::size_t R,
                                  const PointSet& points, PointId center) {
  if (center >= points.size()) {
    throw Error(ErrorKind::kInvalidArgument, "center outside the point set");
  }
  std::vector<Scored<double>> squared;
  squared.reserve(candidates.size());
  for (const auto& c : candidates) {
    if (c.id >= points.size()) {
      throw Error(ErrorKind::kInvalidArgument, "candidate outside the point set");
    }
    if (c.id == center) continue;
    squared.push_back(Scored<double>{c.distance * c.distance, c.id, false});
  }
  std::sort(squared.begin(), squared.end());
  squared.erase(std::unique(squared.begin(), squared.end(),
                            [](const auto& a, const auto& b) { return a.id == b.id; }),
                squared.end());
  std::vector<Scored<double>> kept;
  std::vector<std::size_t> kept_fresh;
  prune_sorted(ExactMetric{&points}, squared, alpha * alpha, R, kept, kept_fresh);
  std::vector<PointId> ids;
  for (const auto& s : kept) ids.push_back(s.id);
  return ids;
}

VamanaGraph build_vamana(const PointSet& points, const VamanaParams& params) {
  params.validate();
  const std::size_t n = points.size();
  if (n < 2) throw Error(ErrorKind::kInvalidArgument, "Vamana needs n >= 2");

  VamanaGraph graph;
  graph.params = params;
  if (params.R >= n) {
    warn("R = " + std::to_string(params.R) + " clamped to n - 1 = " +
         std::to_string(n - 1));
    graph.params.R = n - 1;
  }
  const std::size_t R = graph.params.R;
  const std::size_t L = graph.params.L;

  std::mt19937_64 rng(params.seed);
  graph.out_neighbors.resize(n);
  random_regular_init(graph, R, rng);
  graph.medoid = sampled_medoid(points, rng);

  const unsigned threads = std::max(1u, params.threads);
  GraphBuilder builder(points, graph, threads > 1);
  std::vector<PointId> order(n);
  for (std::size_t pass = 0; pass < params.passes; ++pass) {
    const float alpha =
        (params.passes > 1 && pass == 0) ? 1.0f : static_cast<float>(params.alpha);
    std::iota(order.begin(), order.end(), PointId{0});
    std::shuffle(order.begin(), order.end(), rng);

    if (threads == 1) {
      Scratch scratch;
      Buffers<float> buf;
      for (PointId p : order) builder.insert_point(p, alpha, R, L, scratch, buf);
      continue;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      Scratch scratch;
      Buffers<float> buf;
      for (std::size_t i = next++; i < n; i = next++) {
        builder.insert_point(order[i], alpha, R, L, scratch, buf);
      }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return graph;
}

std::vector<WeightedEdge> symmetrized_edges(const PointSet& points,
                                            const VamanaGraph& graph) {
  std::vector<std::pair<PointId, PointId>> pairs;
  for (PointId u = 0; u < graph.size(); ++u) {
    for (PointId v : graph.out_neighbors[u]) {
      if (u != v) pairs.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<WeightedEdge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    edges.push_back(WeightedEdge{u, v, point_distance(points, u, v)});
  }
  return edges;
}

namespace {

SpanningTree repair_forest(const PointSet& points, const Forest& forest) {
  const std::size_t k = forest.trees.size();
  const std::size_t n = points.size();
  warn("approximate graph is disconnected (" + std::to_string(k) +
       " components); bridging with exact nearest cross pairs");

  struct Bridge {
    double sq = std::numeric_limits<double>::infinity();
    PointId u = 0, v = 0;
  };
  std::vector<Bridge> best(k * k);
  for (PointId i = 0; i < n; ++i) {
    const auto ci = forest.component_of[i];
    for (PointId j = i + 1; j < n; ++j) {
      const auto cj = forest.component_of[j];
      if (ci == cj) continue;
      const double d = detail::squared_distance(points.row_ptr(i), points.row_ptr(j),
                                                points.dim());
      auto& b = best[std::min(ci, cj) * k + std::max(ci, cj)];
      if (d < b.sq) b = Bridge{d, i, j};
    }
  }
  std::vector<WeightedEdge> bridges;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const auto& br = best[a * k + b];
      bridges.push_back(WeightedEdge{br.u, br.v, std::sqrt(br.sq)});
    }
  }
  std::sort(bridges.begin(), bridges.end(), edge_less);

  UnionFind components(k);
  std::vector<WeightedEdge> edges = forest.all_edges();
  std::vector<WeightedEdge> added;
  for (const auto& b : bridges) {
    if (components.unite(forest.component_of[b.u], forest.component_of[b.v]) !=
        UnionFind::npos) {
      added.push_back(b);
    }
  }
  edges.insert(edges.end(), added.begin(), added.end());
  SpanningTree tree = make_spanning_tree(n, std::move(edges));
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    if (std::find(added.begin(), added.end(), tree.edges[i]) != added.end()) {
      tree.bridge_edges.push_back(i);
    }
  }
  return tree;
}

}  // namespace

SpanningTree amst_from_graph(const PointSet& points, const VamanaGraph& graph) {
  const auto edges = symmetrized_edges(points, graph);
  auto result = mst_of_graph(points.size(), edges);
  if (auto* tree = std::get_if<SpanningTree>(&result)) return std::move(*tree);
  return repair_forest(points, std::get<Forest>(result));
}

SpanningTree amst(const PointSet& points, const VamanaParams& params) {
  if (points.empty()) throw Error(ErrorKind::kEmptyInput, "point set is empty");
  if (points.size() == 1) {
    params.validate();
    SpanningTree tree;
    tree.n = 1;
    return tree;
  }
  return amst_from_graph(points, build_vamana(points, params));
}

}  // namespace topolayout
