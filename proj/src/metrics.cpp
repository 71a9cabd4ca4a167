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

#include "topolayout/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <string>

#include "topolayout/error.hpp"

namespace topolayout {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Largest DP table (cells) for which 1-D matchings are reconstructed.
constexpr std::size_t kBacktrackCells = std::size_t{1} << 26;

struct FinitePart {
  std::vector<PersistencePair> points;
  std::vector<std::size_t> index;  // position in the source diagram
};

FinitePart finite_part(const PersistenceDiagram& d) {
  FinitePart f;
  for (std::size_t i = 0; i < d.pairs.size(); ++i) {
    if (d.pairs[i].is_finite()) {
      f.points.push_back(d.pairs[i]);
      f.index.push_back(i);
    }
  }
  return f;
}

void check_pairs(const PersistenceDiagram& d) {
  for (const auto& p : d.pairs) {
    if (std::isnan(p.birth) || std::isnan(p.death) || !std::isfinite(p.birth) ||
        p.death < p.birth) {
      throw Error(ErrorKind::kInvalidArgument, "diagram pair is not a valid (birth, death)");
    }
  }
}

std::pair<FinitePart, FinitePart> prepare(const PersistenceDiagram& d1,
                                          const PersistenceDiagram& d2) {
  check_pairs(d1);
  check_pairs(d2);
  if (d1.infinite_count() != d2.infinite_count()) {
    throw Error(ErrorKind::kInvalidArgument,
                "diagrams have different numbers of infinite pairs (" +
                    std::to_string(d1.infinite_count()) + " vs " +
                    std::to_string(d2.infinite_count()) + ")");
  }
  return {finite_part(d1), finite_part(d2)};
}

// True when every finite point of both diagrams shares one birth value.
bool common_birth(const FinitePart& a, const FinitePart& b, double& birth) {
  bool found = false;
  for (const auto* part : {&a, &b}) {
    for (const auto& p : part->points) {
      if (!found) {
        birth = p.birth;
        found = true;
      } else if (p.birth != birth) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> order_by_death(const FinitePart& f) {
  std::vector<std::size_t> order(f.points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return f.points[i].death < f.points[j].death;
  });
  return order;
}

// Hopcroft-Karp on a bipartite graph given by adjacency lists.
class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(const std::vector<std::vector<std::size_t>>& adj,
                            std::size_t right_size)
      : adj_(adj),
        match_left_(adj.size(), kNone),
        match_right_(right_size, kNone),
        dist_(adj.size()) {}

  std::size_t run() {
    std::size_t size = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (match_left_[u] == kNone && dfs(u)) ++size;
      }
    }
    return size;
  }

  const std::vector<std::size_t>& match_left() const { return match_left_; }
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

 private:
  bool bfs() {
    std::queue<std::size_t> q;
    bool reachable_free = false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kNone) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = kNone;
      }
    }
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adj_[u]) {
        const std::size_t w = match_right_[v];
        if (w == kNone) {
          reachable_free = true;
        } else if (dist_[w] == kNone) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(std::size_t u) {
    for (std::size_t v : adj_[u]) {
      const std::size_t w = match_right_[v];
      if (w == kNone || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kNone;
    return false;
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> dist_;
};

// Augmented bipartite graph: left = D1 points then diagonal copies of D2
// points; right = D2 points then diagonal copies of D1 points.
struct Augmented {
  std::size_t m = 0;
  std::size_t k = 0;
  std::vector<double> cross;   // m x k
  std::vector<double> diag_a;  // m
  std::vector<double> diag_b;  // k
};

Augmented augment(const FinitePart& a, const FinitePart& b, GroundMetric metric) {
  Augmented g;
  g.m = a.points.size();
  g.k = b.points.size();
  g.cross.resize(g.m * g.k);
  for (std::size_t i = 0; i < g.m; ++i) {
    for (std::size_t j = 0; j < g.k; ++j) {
      g.cross[i * g.k + j] = pair_cost(a.points[i], b.points[j], metric);
    }
    g.diag_a.push_back(diagonal_cost(a.points[i], metric));
  }
  for (const auto& q : b.points) g.diag_b.push_back(diagonal_cost(q, metric));
  return g;
}

std::vector<std::vector<std::size_t>> threshold_graph(const Augmented& g, double t) {
  std::vector<std::vector<std::size_t>> adj(g.m + g.k);
  for (std::size_t i = 0; i < g.m; ++i) {
    for (std::size_t j = 0; j < g.k; ++j) {
      if (g.cross[i * g.k + j] <= t) adj[i].push_back(j);
    }
    if (g.diag_a[i] <= t) adj[i].push_back(g.k + i);
  }
  for (std::size_t j = 0; j < g.k; ++j) {
    auto& row = adj[g.m + j];
    if (g.diag_b[j] <= t) row.push_back(j);
    for (std::size_t i = 0; i < g.m; ++i) row.push_back(g.k + i);
  }
  return adj;
}

DiagramMatching general_bottleneck(const FinitePart& a, const FinitePart& b,
                                   GroundMetric metric) {
  const Augmented g = augment(a, b, metric);
  std::vector<double> candidates = g.cross;
  candidates.insert(candidates.end(), g.diag_a.begin(), g.diag_a.end());
  candidates.insert(candidates.end(), g.diag_b.begin(), g.diag_b.end());
  candidates.push_back(0.0);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const std::size_t total = g.m + g.k;
  auto feasible = [&](double t) {
    const auto adj = threshold_graph(g, t);
    return BipartiteMatcher(adj, total).run() == total;
  };
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;  // everything to the diagonal
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible(candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const double t = candidates[lo];
  const auto adj = threshold_graph(g, t);
  BipartiteMatcher matcher(adj, total);
  matcher.run();

  DiagramMatching out;
  out.cost = t;
  for (std::size_t u = 0; u < total; ++u) {
    const std::size_t v = matcher.match_left()[u];
    if (u < g.m) {
      out.pairs.emplace_back(a.index[u], v < g.k ? b.index[v] : DiagramMatching::kDiagonal);
    } else if (v < g.k) {
      out.pairs.emplace_back(DiagramMatching::kDiagonal, b.index[v]);
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

// Every point whose diagonal cost exceeds t must be matched across within
// t. Matchings covering each side's forced points exist independently iff
// one covers both (Mendelsohn-Dulmage), and on a line each side is an
// interval assignment solved greedily.
bool line_feasible(const std::vector<PersistencePair>& xs,
                   const std::vector<PersistencePair>& ys, double t,
                   GroundMetric metric) {
  auto covers = [&](const std::vector<PersistencePair>& from,
                    const std::vector<PersistencePair>& to) {
    std::size_t j = 0;
    for (const auto& x : from) {
      if (diagonal_cost(x, metric) <= t) continue;
      while (j < to.size() && to[j].death < x.death && pair_cost(x, to[j], metric) > t) ++j;
      if (j == to.size() || pair_cost(x, to[j], metric) > t) return false;
      ++j;
    }
    return true;
  };
  return covers(xs, ys) && covers(ys, xs);
}

double line_bottleneck(const FinitePart& a, const FinitePart& b, GroundMetric metric) {
  std::vector<PersistencePair> xs, ys;
  for (std::size_t i : order_by_death(a)) xs.push_back(a.points[i]);
  for (std::size_t j : order_by_death(b)) ys.push_back(b.points[j]);
  double hi = 0.0;
  for (const auto& p : xs) hi = std::max(hi, diagonal_cost(p, metric));
  for (const auto& p : ys) hi = std::max(hi, diagonal_cost(p, metric));
  if (line_feasible(xs, ys, 0.0, metric)) return 0.0;
  // Feasibility flips exactly at a computed cost value, and non-negative
  // doubles order like their bit patterns, so bisecting the bits finds it.
  auto lo_bits = std::bit_cast<std::uint64_t>(0.0);
  auto hi_bits = std::bit_cast<std::uint64_t>(hi);
  while (hi_bits - lo_bits > 1) {
    const std::uint64_t mid = lo_bits + (hi_bits - lo_bits) / 2;
    if (line_feasible(xs, ys, std::bit_cast<double>(mid), metric)) {
      hi_bits = mid;
    } else {
      lo_bits = mid;
    }
  }
  return std::bit_cast<double>(hi_bits);
}

double powered(double cost, double order) {
  return order == 1.0 ? cost : std::pow(cost, order);
}

// Order-1 costs under L-inf and L1 are signed sums of coordinates. Summing
// those exactly makes the distance independent of which optimal matching
// was found, since every optimal matching has the same real cost.
bool exact_terms_apply(double order, GroundMetric metric) {
  return order == 1.0 && metric != GroundMetric::kL2;
}

// Appends x - y with the sign that makes it non-negative.
void push_abs_difference(double x, double y, std::vector<double>& terms) {
  if (x >= y) {
    terms.push_back(x);
    terms.push_back(-y);
  } else {
    terms.push_back(y);
    terms.push_back(-x);
  }
}

void pair_terms(const PersistencePair& a, const PersistencePair& b, GroundMetric metric,
                std::vector<double>& terms) {
  if (metric == GroundMetric::kL1) {
    push_abs_difference(a.birth, b.birth, terms);
    push_abs_difference(a.death, b.death, terms);
    return;
  }
  std::vector<double> db, dd;
  push_abs_difference(a.birth, b.birth, db);
  push_abs_difference(a.death, b.death, dd);
  const double larger_birth = exact_sum(std::vector<double>{db[0], db[1], -dd[0], -dd[1]});
  const auto& pick = larger_birth >= 0.0 ? db : dd;
  terms.insert(terms.end(), pick.begin(), pick.end());
}

void diagonal_terms(const PersistencePair& a, GroundMetric metric, std::vector<double>& terms) {
  const double scale = metric == GroundMetric::kL1 ? 1.0 : 0.5;
  terms.push_back(a.death * scale);
  terms.push_back(-a.birth * scale);
}

// Hungarian algorithm (shortest augmenting paths with potentials) on a
// square matrix; +inf marks forbidden cells. Returns column of each row.
std::vector<std::size_t> hungarian(const std::vector<double>& cost, std::size_t n) {
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double c = cost[(i0 - 1) * n + (j - 1)];
        if (c != kInf) {
          const double cur = c - u[i0] - v[j];
          if (cur < minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (j1 == 0) throw Error(ErrorKind::kDegenerate, "assignment problem is infeasible");
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else if (minv[j] != kInf) {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> col_of_row(n);
  for (std::size_t j = 1; j <= n; ++j) col_of_row[p[j] - 1] = j - 1;
  return col_of_row;
}

DiagramMatching general_wasserstein(const FinitePart& a, const FinitePart& b,
                                    double order, GroundMetric metric) {
  const Augmented g = augment(a, b, metric);
  const std::size_t n = g.m + g.k;
  std::vector<double> cost(n * n, kInf);
  for (std::size_t i = 0; i < g.m; ++i) {
    for (std::size_t j = 0; j < g.k; ++j) {
      cost[i * n + j] = powered(g.cross[i * g.k + j], order);
    }
    cost[i * n + g.k + i] = powered(g.diag_a[i], order);
  }
  for (std::size_t j = 0; j < g.k; ++j) {
    cost[(g.m + j) * n + j] = powered(g.diag_b[j], order);
    for (std::size_t i = 0; i < g.m; ++i) cost[(g.m + j) * n + g.k + i] = 0.0;
  }
  const auto col = hungarian(cost, n);

  DiagramMatching out;
  std::vector<double> costs, terms;
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t c = col[r];
    if (r < g.m && c < g.k) {
      out.pairs.emplace_back(a.index[r], b.index[c]);
      costs.push_back(g.cross[r * g.k + c]);
      pair_terms(a.points[r], b.points[c], metric, terms);
    } else if (r < g.m) {
      out.pairs.emplace_back(a.index[r], DiagramMatching::kDiagonal);
      costs.push_back(g.diag_a[r]);
      diagonal_terms(a.points[r], metric, terms);
    } else if (c < g.k) {
      out.pairs.emplace_back(DiagramMatching::kDiagonal, b.index[c]);
      costs.push_back(g.diag_b[c]);
      diagonal_terms(b.points[c], metric, terms);
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  out.cost = exact_terms_apply(order, metric) ? exact_sum(terms)
                                              : canonical_wasserstein_sum(std::move(costs), order);
  return out;
}

// On a line an optimal matching never crosses, so a DP over both sorted
// sequences (match, or send either head to the diagonal) is exact.
struct LineWasserstein {
  double value = 0.0;
  std::optional<DiagramMatching> matching;
};

LineWasserstein line_wasserstein(const FinitePart& a, const FinitePart& b, double order,
                                 GroundMetric metric, bool want_matching) {
  const auto xo = order_by_death(a);
  const auto yo = order_by_death(b);
  const std::size_t m = xo.size();
  const std::size_t k = yo.size();
  const bool backtrack = want_matching || (m + 1) * (k + 1) <= kBacktrackCells;
  std::vector<std::uint8_t> choice(backtrack ? (m + 1) * (k + 1) : 0);
  enum : std::uint8_t { kMatch = 0, kDropX = 1, kDropY = 2 };

  std::vector<double> dx(m), dy(k);
  for (std::size_t i = 0; i < m; ++i) dx[i] = powered(diagonal_cost(a.points[xo[i]], metric), order);
  for (std::size_t j = 0; j < k; ++j) dy[j] = powered(diagonal_cost(b.points[yo[j]], metric), order);

  std::vector<double> prev(k + 1), cur(k + 1);
  prev[0] = 0.0;
  for (std::size_t j = 1; j <= k; ++j) {
    prev[j] = prev[j - 1] + dy[j - 1];
    if (backtrack) choice[j] = kDropY;
  }
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = prev[0] + dx[i - 1];
    if (backtrack) choice[i * (k + 1)] = kDropX;
    const auto& x = a.points[xo[i - 1]];
    for (std::size_t j = 1; j <= k; ++j) {
      double best = prev[j - 1] + powered(pair_cost(x, b.points[yo[j - 1]], metric), order);
      std::uint8_t pick = kMatch;
      if (const double c = prev[j] + dx[i - 1]; c < best) {
        best = c;
        pick = kDropX;
      }
      if (const double c = cur[j - 1] + dy[j - 1]; c < best) {
        best = c;
        pick = kDropY;
      }
      cur[j] = best;
      if (backtrack) choice[i * (k + 1) + j] = pick;
    }
    std::swap(prev, cur);
  }

  LineWasserstein out;
  if (!backtrack) {
    out.value = order == 1.0 ? prev[k] : std::pow(prev[k], 1.0 / order);
    return out;
  }
  DiagramMatching matching;
  std::vector<double> costs, terms;
  std::size_t i = m, j = k;
  while (i > 0 || j > 0) {
    const auto pick = choice[i * (k + 1) + j];
    if (pick == kMatch) {
      const std::size_t xi = xo[i - 1], yj = yo[j - 1];
      matching.pairs.emplace_back(a.index[xi], b.index[yj]);
      costs.push_back(pair_cost(a.points[xi], b.points[yj], metric));
      pair_terms(a.points[xi], b.points[yj], metric, terms);
      --i;
      --j;
    } else if (pick == kDropX) {
      const std::size_t xi = xo[i - 1];
      matching.pairs.emplace_back(a.index[xi], DiagramMatching::kDiagonal);
      costs.push_back(diagonal_cost(a.points[xi], metric));
      diagonal_terms(a.points[xi], metric, terms);
      --i;
    } else {
      const std::size_t yj = yo[j - 1];
      matching.pairs.emplace_back(DiagramMatching::kDiagonal, b.index[yj]);
      costs.push_back(diagonal_cost(b.points[yj], metric));
      diagonal_terms(b.points[yj], metric, terms);
      --j;
    }
  }
  std::sort(matching.pairs.begin(), matching.pairs.end());
  matching.cost = exact_terms_apply(order, metric)
                      ? exact_sum(terms)
                      : canonical_wasserstein_sum(std::move(costs), order);
  out.value = matching.cost;
  out.matching = std::move(matching);
  return out;
}

void check_order(double order) {
  if (!(order >= 1.0) || !std::isfinite(order)) {
    throw Error(ErrorKind::kInvalidArgument, "Wasserstein order must be finite and >= 1");
  }
}

}  // namespace

double rwe(const SpanningTree& approx, const SpanningTree& exact) {
  if (approx.n != exact.n) {
    throw Error(ErrorKind::kInvalidArgument, "trees span different point counts");
  }
  if (!(exact.total_weight > 0.0)) {
    throw Error(ErrorKind::kDegenerate,
                "exact tree has zero total weight; relative error is undefined");
  }
  return (approx.total_weight - exact.total_weight) / exact.total_weight;
}

PersistenceDiagram normalize_diagram(const PersistenceDiagram& d) {
  double max_death = -kInf;
  for (const auto& p : d.pairs) {
    if (p.is_finite()) max_death = std::max(max_death, p.death);
  }
  if (max_death == -kInf) {
    warn("diagram has no finite pairs; normalization skipped");
    return d;
  }
  if (!(max_death > 0.0)) {
    warn("diagram has zero maximum death; normalization skipped");
    return d;
  }
  PersistenceDiagram out = d;
  for (auto& p : out.pairs) {
    if (!p.is_finite()) continue;
    p.birth /= max_death;
    p.death /= max_death;
  }
  return out;
}

double pair_cost(const PersistencePair& a, const PersistencePair& b, GroundMetric metric) {
  const double db = std::abs(a.birth - b.birth);
  const double dd = std::abs(a.death - b.death);
  switch (metric) {
    case GroundMetric::kLInf:
      return std::max(db, dd);
    case GroundMetric::kL1:
      return db + dd;
    case GroundMetric::kL2:
      return std::hypot(db, dd);
  }
  return std::max(db, dd);
}

double diagonal_cost(const PersistencePair& a, GroundMetric metric) {
  const double span = a.death - a.birth;
  switch (metric) {
    case GroundMetric::kLInf:
      return span / 2.0;
    case GroundMetric::kL1:
      return span;
    case GroundMetric::kL2:
      return span / std::sqrt(2.0);
  }
  return span / 2.0;
}

// Shewchuk's non-overlapping partials with a final half-way correction, the
// same scheme as Python's math.fsum.
double exact_sum(std::span<const double> terms) {
  std::vector<double> partials;
  for (double x : terms) {
    std::size_t used = 0;
    for (double y : partials) {
      if (std::abs(x) < std::abs(y)) std::swap(x, y);
      const double hi = x + y;
      const double lo = y - (hi - x);
      if (lo != 0.0) partials[used++] = lo;
      x = hi;
    }
    partials.resize(used);
    partials.push_back(x);
  }
  if (partials.empty()) return 0.0;
  std::size_t n = partials.size() - 1;
  double hi = partials[n];
  double lo = 0.0;
  while (n > 0) {
    const double x = hi;
    const double y = partials[--n];
    hi = x + y;
    lo = y - (hi - x);
    if (lo != 0.0) break;
  }
  if (n > 0 && ((lo < 0.0 && partials[n - 1] < 0.0) || (lo > 0.0 && partials[n - 1] > 0.0))) {
    const double y = lo * 2.0;
    const double x = hi + y;
    if (y == x - hi) hi = x;
  }
  return hi;
}

double canonical_wasserstein_sum(std::vector<double> costs, double order) {
  for (auto& c : costs) c = powered(c, order);
  std::sort(costs.begin(), costs.end());
  double sum = 0.0;
  for (double c : costs) sum += c;
  return order == 1.0 ? sum : std::pow(sum, 1.0 / order);
}

double bottleneck_distance(const PersistenceDiagram& d1, const PersistenceDiagram& d2,
                           GroundMetric metric) {
  const auto [a, b] = prepare(d1, d2);
  if (a.points.empty() && b.points.empty()) return 0.0;
  double birth = 0.0;
  if (common_birth(a, b, birth)) return line_bottleneck(a, b, metric);
  return general_bottleneck(a, b, metric).cost;
}

DiagramMatching bottleneck_matching(const PersistenceDiagram& d1,
                                    const PersistenceDiagram& d2, GroundMetric metric) {
  const auto [a, b] = prepare(d1, d2);
  if (a.points.empty() && b.points.empty()) return {};
  return general_bottleneck(a, b, metric);
}

double wasserstein_distance(const PersistenceDiagram& d1, const PersistenceDiagram& d2,
                            double order, GroundMetric metric) {
  check_order(order);
  const auto [a, b] = prepare(d1, d2);
  if (a.points.empty() && b.points.empty()) return 0.0;
  double birth = 0.0;
  if (common_birth(a, b, birth)) return line_wasserstein(a, b, order, metric, false).value;
  return general_wasserstein(a, b, order, metric).cost;
}

DiagramMatching wasserstein_matching(const PersistenceDiagram& d1,
                                     const PersistenceDiagram& d2, double order,
                                     GroundMetric metric) {
  check_order(order);
  const auto [a, b] = prepare(d1, d2);
  if (a.points.empty() && b.points.empty()) return {};
  double birth = 0.0;
  if (common_birth(a, b, birth)) return *line_wasserstein(a, b, order, metric, true).matching;
  return general_wasserstein(a, b, order, metric);
}

double normalized_wasserstein(const PersistenceDiagram& d1, const PersistenceDiagram& d2,
                              double order, GroundMetric metric) {
  const std::size_t m = std::max(d1.size() - d1.infinite_count(),
                                 d2.size() - d2.infinite_count());
  const double w = wasserstein_distance(d1, d2, order, metric);
  return m == 0 ? 0.0 : w / static_cast<double>(m);
}

const char* to_string(GroundMetric metric) {
  switch (metric) {
    case GroundMetric::kLInf:
      return "linf";
    case GroundMetric::kL1:
      return "l1";
    case GroundMetric::kL2:
      return "l2";
  }
  return "linf";
}

GroundMetric parse_ground_metric(const std::string& name) {
  if (name == "linf") return GroundMetric::kLInf;
  if (name == "l1") return GroundMetric::kL1;
  if (name == "l2") return GroundMetric::kL2;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown ground metric '" + name + "' (expected linf, l1 or l2)");
}

}  // namespace topolayout
