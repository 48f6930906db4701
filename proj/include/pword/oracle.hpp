#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pword/errors.hpp"
#include "pword/partial_word.hpp"

// Independent ground truth for the threshold functions. The position graph on
// {0,...,n-1} joins i and j when p | (j-i) or q | (j-i); the minimum number of
// holes in a length-n counterexample equals the minimum vertex separator of
// that graph. Everything here is deliberately simple: unit-capacity max-flow
// over all non-adjacent vertex pairs, plus a subset-enumeration second
// opinion.

namespace pword {

struct PQGraph {
  int n;
  std::int64_t p;
  std::int64_t q;

  PQGraph(std::int64_t vertex_count, std::int64_t period_p, std::int64_t period_q)
      : n(static_cast<int>(vertex_count)), p(period_p), q(period_q) {
    if (vertex_count < 1 || vertex_count > 5000)
      throw std::domain_error("pq graph: vertex count out of the supported range");
    if (p < 1 || q < 1) throw std::domain_error("pq graph: periods must be positive");
  }

  bool adjacent(int i, int j) const {
    if (i == j) return false;
    const std::int64_t d = i < j ? j - i : i - j;
    return d % p == 0 || d % q == 0;
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      for (const std::int64_t step : {p, q}) {
        for (std::int64_t j = i + step; j < n; j += step) {
          adj[static_cast<std::size_t>(i)].push_back(static_cast<int>(j));
          adj[static_cast<std::size_t>(j)].push_back(i);
        }
      }
    }
    for (auto& row : adj) {
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return adj;
  }

  bool connected() const {
    const auto adj = adjacency();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const int u : adj[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          ++reached;
          stack.push_back(u);
        }
      }
    }
    return reached == n;
  }
};

namespace detail {

// Dinic on the vertex-split network: x_in = 2x, x_out = 2x+1, unit capacity
// on every split arc, unbounded capacity along edges. Augmentation stops at
// `limit`, which prunes pairs that cannot improve the current best cut.
class VertexCutSolver {
 public:
  explicit VertexCutSolver(const std::vector<std::vector<int>>& adj)
      : n_(static_cast<int>(adj.size())), head_(2 * adj.size(), -1) {
    for (int v = 0; v < n_; ++v) add_edge(2 * v, 2 * v + 1, 1);
    for (int v = 0; v < n_; ++v)
      for (const int u : adj[static_cast<std::size_t>(v)])
        if (v < u) {
          add_edge(2 * v + 1, 2 * u, kInf);
          add_edge(2 * u + 1, 2 * v, kInf);
        }
    base_cap_ = cap_;
  }

  // Max flow from s_out to t_in, stopping once `limit` is reached.
  int max_flow(int s, int t, int limit) {
    cap_ = base_cap_;
    source_ = 2 * s + 1;
    sink_ = 2 * t;
    int flow = 0;
    while (flow < limit && bfs_levels()) {
      iter_ = head_;
      int pushed;
      while (flow < limit && (pushed = dfs(source_, limit - flow)) > 0) flow += pushed;
    }
    return flow;
  }

  // After an uncapped max_flow run: the split vertices saturated across the
  // residual source side, i.e. one minimum vertex cut.
  std::vector<int> min_cut_vertices() const {
    std::vector<char> reach(head_.size(), 0);
    std::vector<int> stack{source_};
    reach[static_cast<std::size_t>(source_)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int e = head_[static_cast<std::size_t>(v)]; e != -1; e = next_[static_cast<std::size_t>(e)]) {
        if (cap_[static_cast<std::size_t>(e)] <= 0) continue;
        const int u = to_[static_cast<std::size_t>(e)];
        if (!reach[static_cast<std::size_t>(u)]) {
          reach[static_cast<std::size_t>(u)] = 1;
          stack.push_back(u);
        }
      }
    }
    std::vector<int> cut;
    for (int v = 0; v < n_; ++v)
      if (reach[static_cast<std::size_t>(2 * v)] && !reach[static_cast<std::size_t>(2 * v + 1)])
        cut.push_back(v);
    return cut;
  }

 private:
  static constexpr int kInf = 1 << 28;

  void add_edge(int from, int to, int cap) {
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[static_cast<std::size_t>(from)]);
    head_[static_cast<std::size_t>(from)] = static_cast<int>(to_.size()) - 1;
    to_.push_back(from);
    cap_.push_back(0);
    next_.push_back(head_[static_cast<std::size_t>(to)]);
    head_[static_cast<std::size_t>(to)] = static_cast<int>(to_.size()) - 1;
  }

  bool bfs_levels() {
    level_.assign(head_.size(), -1);
    std::vector<int> queue{source_};
    level_[static_cast<std::size_t>(source_)] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int v = queue[qi];
      for (int e = head_[static_cast<std::size_t>(v)]; e != -1; e = next_[static_cast<std::size_t>(e)]) {
        const int u = to_[static_cast<std::size_t>(e)];
        if (cap_[static_cast<std::size_t>(e)] > 0 && level_[static_cast<std::size_t>(u)] == -1) {
          level_[static_cast<std::size_t>(u)] = level_[static_cast<std::size_t>(v)] + 1;
          queue.push_back(u);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink_)] != -1;
  }

  int dfs(int v, int budget) {
    if (v == sink_) return budget;
    for (int& e = iter_[static_cast<std::size_t>(v)]; e != -1; e = next_[static_cast<std::size_t>(e)]) {
      const int u = to_[static_cast<std::size_t>(e)];
      if (cap_[static_cast<std::size_t>(e)] <= 0 ||
          level_[static_cast<std::size_t>(u)] != level_[static_cast<std::size_t>(v)] + 1)
        continue;
      const int pushed = dfs(u, std::min(budget, cap_[static_cast<std::size_t>(e)]));
      if (pushed > 0) {
        cap_[static_cast<std::size_t>(e)] -= pushed;
        cap_[static_cast<std::size_t>(e ^ 1)] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  int n_;
  int source_ = 0;
  int sink_ = 0;
  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> base_cap_;
  std::vector<int> next_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace detail

struct SeparatorResult {
  bool complete = false;     // no separator exists (the graph is a clique)
  std::int64_t size = 0;     // minimum separator size; 0 when already disconnected
  std::vector<int> witness;  // one minimum separator (empty when disconnected/complete)
};

// Minimum vertex separator by max-flow over every non-adjacent vertex pair,
// seeded with the neighbourhood of a minimum-degree vertex as the initial
// upper bound. Flow runs are capped at the current best, so confirmed-worse
// pairs abort early; exactness is not affected.
inline SeparatorResult min_vertex_separator(const PQGraph& g) {
  if (g.n == 1) return {true, 0, {}};
  if (!g.connected()) return {false, 0, {}};
  const auto adj = g.adjacency();
  const int n = g.n;

  int anchor = 0;
  for (int v = 1; v < n; ++v)
    if (adj[static_cast<std::size_t>(v)].size() < adj[static_cast<std::size_t>(anchor)].size())
      anchor = v;
  if (adj[static_cast<std::size_t>(anchor)].size() == static_cast<std::size_t>(n - 1))
    return {true, 0, {}};

  // N(anchor) disconnects anchor from its non-neighbours: a valid upper bound.
  std::int64_t best = static_cast<std::int64_t>(adj[static_cast<std::size_t>(anchor)].size());
  std::vector<int> witness = adj[static_cast<std::size_t>(anchor)];

  std::vector<std::pair<int, int>> pairs;
  for (int t = 0; t < n; ++t)
    if (t != anchor && !g.adjacent(anchor, t)) pairs.emplace_back(anchor, t);
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (s != anchor && t != anchor && !g.adjacent(s, t)) pairs.emplace_back(s, t);

  detail::VertexCutSolver solver(adj);
  for (const auto& [s, t] : pairs) {
    if (best == 0) break;
    const int flow = solver.max_flow(s, t, static_cast<int>(best));
    if (flow < best) {
      best = flow;
      witness = solver.min_cut_vertices();
    }
  }
  return {false, best, std::move(witness)};
}

// Minimum holes at length n via the separator oracle. CLI `verify` ground truth.
inline std::int64_t min_holes_oracle(std::int64_t n, std::int64_t p, std::int64_t q) {
  if (std::gcd(p, q) != 1) throw std::domain_error("min_holes_oracle: requires coprime p, q");
  if (n < std::max(p, q)) throw std::domain_error("min_holes_oracle: requires n >= max(p, q)");
  const SeparatorResult result = min_vertex_separator(PQGraph(n, p, q));
  if (result.complete) throw std::logic_error("min_holes_oracle: graph unexpectedly complete");
  return result.size;
}

// Second, flow-free opinion: the smallest k <= max_h such that removing some
// k vertices disconnects the graph, by subset enumeration (guarded by a
// budget of 2^26 connectivity checks). Returns nullopt when every subset of
// size <= max_h leaves the graph connected.
inline std::optional<std::int64_t> min_holes_oracle_exhaustive(std::int64_t n, std::int64_t p,
                                                               std::int64_t q,
                                                               std::int64_t max_h) {
  if (std::gcd(p, q) != 1)
    throw std::domain_error("min_holes_oracle_exhaustive: requires coprime p, q");
  if (n < 2 || n > 32)
    throw std::domain_error("min_holes_oracle_exhaustive: supported for 2 <= n <= 32");
  const int size = static_cast<int>(n);

  std::vector<std::uint32_t> adj_bits(static_cast<std::size_t>(size), 0);
  const PQGraph g(n, p, q);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (g.adjacent(i, j)) adj_bits[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;

  const std::uint32_t all =
      size == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << size) - 1);
  const auto disconnected = [&](std::uint32_t removed) {
    const std::uint32_t remaining = all & ~removed;
    if (__builtin_popcount(remaining) < 2) return false;
    std::uint32_t reach = remaining & (~remaining + 1);  // lowest remaining vertex
    while (true) {
      std::uint32_t frontier = 0;
      for (std::uint32_t bits = reach; bits != 0; bits &= bits - 1) {
        const int v = __builtin_ctz(bits);
        frontier |= adj_bits[static_cast<std::size_t>(v)];
      }
      const std::uint32_t grown = (reach | frontier) & remaining;
      if (grown == reach) break;
      reach = grown;
    }
    return reach != remaining;
  };

  std::int64_t checks = 0;
  constexpr std::int64_t kBudget = std::int64_t{1} << 26;
  for (std::int64_t k = 0; k <= max_h && k <= n; ++k) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (std::int64_t i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = static_cast<int>(i);
    while (true) {
      if (++checks > kBudget)
        throw budget_exceeded_error("min_holes_oracle_exhaustive: subset budget exceeded");
      std::uint32_t removed = 0;
      for (const int v : pick) removed |= std::uint32_t{1} << v;
      if (disconnected(removed)) return k;
      // next k-combination
      std::int64_t slot = k - 1;
      while (slot >= 0 && pick[static_cast<std::size_t>(slot)] ==
                              static_cast<int>(n - k + slot))
        --slot;
      if (slot < 0) break;
      ++pick[static_cast<std::size_t>(slot)];
      for (std::int64_t j = slot + 1; j < k; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

// Threshold by upward scan: the least n with min_holes_oracle(n) > h.
inline std::int64_t threshold_oracle(std::int64_t h, std::int64_t p, std::int64_t q,
                                     std::int64_t n_max) {
  for (std::int64_t n = std::max(p, q); n <= n_max; ++n) {
    if (min_holes_oracle(n, p, q) > h) return n;
  }
  throw std::domain_error("threshold_oracle: scan bound too small");
}

// Count, per residue class j mod p, of the graph's q-edges (i, i+q) with
// i congruent to j. Closed form: ceil((n-j-q)/p); counted directly here.
inline std::vector<std::int64_t> q_edge_counts(const PQGraph& g) {
  if (!(1 < g.p && g.p < g.q) || std::gcd(g.p, g.q) != 1)
    throw std::domain_error("q_edge_counts: requires coprime 1 < p < q");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(g.p), 0);
  for (std::int64_t j = 0; j < g.p; ++j)
    for (std::int64_t i = j; i + g.q <= g.n - 1; i += g.p) ++counts[static_cast<std::size_t>(j)];
  return counts;
}

// The partial word a separator encodes: holes on the separator, letters by
// connected component of what remains. Strong periods p and q hold by
// construction (positions p or q apart are adjacent, hence same component);
// with at least two components the word is non-unary and so lacks period 1.
inline PartialWord separator_word(const PQGraph& g, const std::vector<int>& separator) {
  std::vector<char> removed(static_cast<std::size_t>(g.n), 0);
  for (const int v : separator) removed[static_cast<std::size_t>(v)] = 1;
  const auto adj = g.adjacency();

  std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
  int comps = 0;
  for (int start = 0; start < g.n; ++start) {
    if (removed[static_cast<std::size_t>(start)] || comp[static_cast<std::size_t>(start)] != -1)
      continue;
    const int id = comps++;
    std::vector<int> stack{start};
    comp[static_cast<std::size_t>(start)] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const int u : adj[static_cast<std::size_t>(v)]) {
        if (removed[static_cast<std::size_t>(u)] || comp[static_cast<std::size_t>(u)] != -1)
          continue;
        comp[static_cast<std::size_t>(u)] = id;
        stack.push_back(u);
      }
    }
  }

  std::vector<Symbol> syms;
  syms.reserve(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) {
    if (removed[static_cast<std::size_t>(i)])
      syms.push_back(Symbol::hole());
    else
      syms.push_back(Symbol::letter(comp[static_cast<std::size_t>(i)]));
  }
  return PartialWord(std::move(syms));
}

}  // namespace pword
