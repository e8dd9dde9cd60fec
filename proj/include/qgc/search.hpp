#pragma once

// Code search on a fixed graph. Candidates are the labels at distance >= δ
// from |0⟩; a maximum clique of the compatibility graph over them, plus the
// zero label, is an optimal nondegenerate code. The additive path instead
// grows subgroups of {0} ∪ candidates one generator at a time.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "qgc/clique.hpp"
#include "qgc/code.hpp"
#include "qgc/distance.hpp"

namespace qgc {

struct SearchOptions {
  std::optional<std::chrono::duration<double>> budget;
  bool parallel = true;
  CliqueBound bound = CliqueBound::kGreedyColoring;
  /// Stop as soon as a code reaches the quantum Singleton bound.
  bool stop_at_qs_bound = true;
};

struct SearchResult {
  GraphCode code;
  int diagonal_distance;        // exact, or kAboveCap when above the table cap
  std::size_t candidate_count;  // labels at distance >= δ from 0
  std::uint64_t branches;
};

inline void check_search_delta(const DistanceTable& t, int delta) {
  if (delta < 1) throw InvalidArgument("delta must be >= 1");
  if (delta > t.cap() + 1) {
    throw InvalidArgument("delta " + std::to_string(delta) + " needs a table cap of at least " + std::to_string(delta - 1));
  }
  if (delta > t.diagonal_distance()) throw DegenerateRegime(delta, t.diagonal_distance());
}

/// Label indices of the nonzero labels with table entry >= δ, ascending.
inline std::vector<std::uint64_t> candidate_indices(const DistanceTable& t, int delta) {
  check_search_delta(t, delta);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 1; i < t.size(); ++i) {
    if (t.entry(i) >= delta) out.push_back(i);
  }
  return out;
}

inline std::vector<ModTuple> candidate_set(const DistanceTable& t, int delta) {
  std::vector<ModTuple> out;
  for (auto i : candidate_indices(t, delta)) out.push_back(t.labels().tuple(i));
  return out;
}

/// Nodes are candidate labels; an edge joins two labels at Pauli distance >= δ.
struct CompatibilityGraph {
  std::vector<std::uint64_t> nodes;  // label indices, ascending
  BitGraph adjacency;
  int delta;
};

inline CompatibilityGraph compatibility_graph(const DistanceTable& t, int delta) {
  auto nodes = candidate_indices(t, delta);
  BitGraph adj(nodes.size());
  const auto& space = t.labels();
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    for (std::size_t v = u + 1; v < nodes.size(); ++v) {
      if (t.entry(space.sub(nodes[v], nodes[u])) >= delta) adj.add_edge(u, v);
    }
  }
  return {std::move(nodes), std::move(adj), delta};
}

namespace detail {

inline DistanceTable search_table(const Graph& g, int delta, const SearchOptions& opts) {
  if (delta < 2) throw InvalidArgument("search needs delta >= 2");
  if (delta - 1 > g.n()) throw InvalidArgument("delta - 1 exceeds the number of qudits");
  return build_distance_table(g, delta - 1, opts.parallel);
}

inline std::vector<ModTuple> to_tuples(const LabelSpace& space, const std::vector<std::uint64_t>& idx) {
  std::vector<ModTuple> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(space.tuple(i));
  return out;
}

}  // namespace detail

/// Optimal nondegenerate code on `g` at distance δ via maximum clique.
/// Throws DegenerateRegime when δ exceeds the diagonal distance.
inline SearchResult search_code(const Graph& g, int delta, const SearchOptions& opts = {}) {
  const auto table = detail::search_table(g, delta, opts);
  const auto compat = compatibility_graph(table, delta);

  CliqueOptions copts;
  copts.budget = opts.budget;
  copts.bound = opts.bound;
  const auto qs = qs_bound(g.n(), delta, g.modulus());
  if (opts.stop_at_qs_bound && qs >= 1) copts.size_limit = static_cast<std::size_t>(qs - 1);
  const auto clique = max_clique(compat.adjacency, copts);

  std::vector<std::uint64_t> words{0};
  for (auto node : clique.nodes) words.push_back(compat.nodes[node]);
  GraphCode code(g, delta, detail::to_tuples(table.labels(), words), clique.proven_optimal);
  return {std::move(code), table.diagonal_distance(), compat.nodes.size(), clique.branches};
}

namespace detail {

// Enumerates subgroups H of {0} ∪ candidates by canonical generator
// sequences g_1 < g_2 < ... with g_k = min(H_k \ H_{k-1}), so every subgroup
// is visited once. Any subgroup F reachable from (H, last) has
// F \ H ⊆ pool(H, last), which gives the cut |F| <= |H| + |pool|.
class AdditiveSearch {
 public:
  AdditiveSearch(const LabelSpace& space, std::vector<std::uint8_t> allowed, std::vector<std::uint64_t> candidates,
                 const SearchOptions& opts, std::uint64_t limit)
      : space_(space),
        allowed_(std::move(allowed)),
        candidates_(std::move(candidates)),
        opts_(opts),
        limit_(limit),
        in_group_(space.size(), 0),
        start_(std::chrono::steady_clock::now()) {}

  void run() {
    group_ = {0};
    in_group_[0] = 1;
    best_ = group_;
    extend(0, candidates_);
  }

  const std::vector<std::uint64_t>& best() const noexcept { return best_; }
  bool timed_out() const noexcept { return timed_out_; }
  std::uint64_t branches() const noexcept { return branches_; }

 private:
  bool should_stop() {
    if (stop_) return true;
    if (limit_ != 0 && best_.size() >= limit_) return stop_ = true;
    if (opts_.budget && (++ticks_ & 0xFF) == 0 && std::chrono::steady_clock::now() - start_ > *opts_.budget) {
      timed_out_ = true;
      stop_ = true;
    }
    return stop_;
  }

  // Elements x > last, outside H, with x + h allowed and > last for all h in H.
  std::vector<std::uint64_t> pool(const std::vector<std::uint64_t>& parent, std::uint64_t last) const {
    std::vector<std::uint64_t> out;
    for (auto x : parent) {
      if (x <= last || in_group_[x]) continue;
      bool ok = true;
      for (auto h : group_) {
        const auto y = space_.add(x, h);
        if (!allowed_[y] || y <= last) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(x);
    }
    return out;
  }

  void extend(std::uint64_t last, const std::vector<std::uint64_t>& parent_pool) {
    ++branches_;
    const auto candidates = pool(parent_pool, last);
    const std::size_t h = group_.size();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (should_stop()) return;
      const std::size_t reachable = h + (candidates.size() - i);
      if ((reachable / h) * h <= best_.size()) return;
      const auto g = candidates[i];

      // New cosets H + j·g until j·g falls back into H.
      const std::size_t before = group_.size();
      bool valid = true;
      std::uint64_t step = g;
      while (valid && !in_group_[step]) {
        for (std::size_t k = 0; k < h; ++k) {
          const auto y = space_.add(group_[k], step);
          if (!allowed_[y] || y < g) {
            valid = false;
            break;
          }
          if (!in_group_[y]) {
            in_group_[y] = 1;
            group_.push_back(y);
          }
        }
        step = space_.add(step, g);
      }
      if (valid) {
        if (group_.size() > best_.size()) best_ = group_;
        extend(g, candidates);
      }
      for (std::size_t k = before; k < group_.size(); ++k) in_group_[group_[k]] = 0;
      group_.resize(before);
    }
  }

  const LabelSpace& space_;
  std::vector<std::uint8_t> allowed_;  // nonzero labels usable in a code
  std::vector<std::uint64_t> candidates_;
  const SearchOptions& opts_;
  std::uint64_t limit_;
  std::vector<std::uint8_t> in_group_;
  std::vector<std::uint64_t> group_;
  std::vector<std::uint64_t> best_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t ticks_ = 0;
  std::uint64_t branches_ = 0;
  bool stop_ = false;
  bool timed_out_ = false;
};

}  // namespace detail

/// Largest additive code on `g` at distance δ. For a subgroup every pair
/// difference is itself an element, so it suffices that all nonzero
/// elements are candidates.
inline SearchResult search_additive(const Graph& g, int delta, const SearchOptions& opts = {}) {
  const auto table = detail::search_table(g, delta, opts);
  auto candidates = candidate_indices(table, delta);
  std::vector<std::uint8_t> allowed(table.size(), 0);
  for (auto c : candidates) allowed[c] = 1;

  const auto qs = qs_bound(g.n(), delta, g.modulus());
  const std::uint64_t limit = opts.stop_at_qs_bound ? qs : 0;
  const std::size_t count = candidates.size();
  detail::AdditiveSearch search(table.labels(), std::move(allowed), std::move(candidates), opts, limit);
  search.run();

  auto words = search.best();
  std::sort(words.begin(), words.end());
  GraphCode code(g, delta, detail::to_tuples(table.labels(), words), !search.timed_out());
  return {std::move(code), table.diagonal_distance(), count, search.branches()};
}

}  // namespace qgc
