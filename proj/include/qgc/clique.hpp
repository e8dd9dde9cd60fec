#pragma once

// Branch-and-bound maximum clique in the style of Carraghan and Pardalos:
// vertices are branched on in ascending index order and a branch is cut when
// the current clique plus an upper bound on the remaining candidates cannot
// beat the incumbent. Because the branching order is fixed and only strict
// improvements replace the incumbent, the result is the lexicographically
// first maximum clique.

#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace qgc {

/// Undirected simple graph over nodes 0..size-1 with bitset rows.
class BitGraph {
 public:
  explicit BitGraph(std::size_t size) : size_(size), words_((size + 63) / 64), rows_(size * words_, 0) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t words() const noexcept { return words_; }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) return;
    set(row(u), v);
    set(row(v), u);
  }

  bool adjacent(std::size_t u, std::size_t v) const { return (row(u)[v / 64] >> (v % 64)) & 1u; }

  const std::uint64_t* row(std::size_t u) const { return rows_.data() + u * words_; }

  std::size_t degree(std::size_t u) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(row(u)[w]));
    return d;
  }

 private:
  std::uint64_t* row(std::size_t u) { return rows_.data() + u * words_; }
  static void set(std::uint64_t* r, std::size_t v) { r[v / 64] |= std::uint64_t{1} << (v % 64); }

  std::size_t size_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

enum class CliqueBound {
  kCandidateCount,  // |C| + |P|, the plain Carraghan–Pardalos cut
  kGreedyColoring,  // |C| + colours of a greedy colouring of P
};

struct CliqueOptions {
  /// Wall-clock limit; unset means run to completion.
  std::optional<std::chrono::duration<double>> budget;
  /// A known upper bound on the clique size. Reaching it ends the search
  /// with a proof of optimality.
  std::optional<std::size_t> size_limit;
  CliqueBound bound = CliqueBound::kGreedyColoring;
};

struct CliqueResult {
  std::vector<std::size_t> nodes;  // ascending
  bool proven_optimal = false;
  std::uint64_t branches = 0;
};

namespace detail {

class CliqueSearch {
 public:
  CliqueSearch(const BitGraph& g, const CliqueOptions& opts)
      : g_(g), opts_(opts), start_(std::chrono::steady_clock::now()) {}

  CliqueResult run() {
    std::vector<std::uint64_t> all(g_.words(), 0);
    for (std::size_t v = 0; v < g_.size(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    if (g_.size() > 0) expand(all);
    CliqueResult r;
    r.nodes = best_;
    r.proven_optimal = !timed_out_;
    r.branches = branches_;
    return r;
  }

 private:
  bool should_stop() {
    if (stop_) return true;
    if (opts_.size_limit && best_.size() >= *opts_.size_limit) {
      stop_ = true;
      return true;
    }
    if (opts_.budget && (++ticks_ & 0x3FF) == 0) {
      if (std::chrono::steady_clock::now() - start_ > *opts_.budget) {
        timed_out_ = true;
        stop_ = true;
      }
    }
    return stop_;
  }

  static std::vector<std::size_t> members(const std::vector<std::uint64_t>& set) {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < set.size(); ++w) {
      auto bits = set[w];
      while (bits) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  // suffix[i] bounds the clique number of {P[i], P[i+1], ...}.
  std::vector<std::size_t> suffix_bounds(const std::vector<std::size_t>& p) const {
    std::vector<std::size_t> suffix(p.size());
    if (opts_.bound == CliqueBound::kCandidateCount) {
      for (std::size_t i = 0; i < p.size(); ++i) suffix[i] = p.size() - i;
      return suffix;
    }
    // Greedy colouring from the back: each vertex takes the first colour
    // class holding none of its neighbours.
    std::vector<std::vector<std::uint64_t>> classes;
    std::size_t used = 0;
    for (std::size_t k = p.size(); k-- > 0;) {
      const auto v = p[k];
      const auto* nb = g_.row(v);
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = false;
        for (std::size_t w = 0; w < g_.words() && !clash; ++w) clash = (classes[c][w] & nb[w]) != 0;
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back(g_.words(), 0);
      classes[c][v / 64] |= std::uint64_t{1} << (v % 64);
      used = std::max(used, c + 1);
      suffix[k] = used;
    }
    return suffix;
  }

  void expand(std::vector<std::uint64_t> candidates) {
    ++branches_;
    const auto order = members(candidates);
    const auto bound = suffix_bounds(order);
    std::vector<std::uint64_t> next(g_.words());
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (should_stop()) return;
      if (current_.size() + bound[i] <= best_.size()) return;
      const auto v = order[i];
      candidates[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      const auto* nb = g_.row(v);
      bool any = false;
      for (std::size_t w = 0; w < g_.words(); ++w) {
        next[w] = candidates[w] & nb[w];
        any = any || next[w] != 0;
      }
      current_.push_back(v);
      if (current_.size() > best_.size()) best_ = current_;
      if (any) expand(next);
      current_.pop_back();
    }
  }

  const BitGraph& g_;
  const CliqueOptions& opts_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::uint64_t ticks_ = 0;
  std::uint64_t branches_ = 0;
  bool stop_ = false;
  bool timed_out_ = false;
};

}  // namespace detail

/// Maximum clique by branch and bound. `proven_optimal` is false only when
/// the budget ran out; the incumbent is returned either way.
inline CliqueResult max_clique(const BitGraph& g, const CliqueOptions& opts = {}) {
  return detail::CliqueSearch(g, opts).run();
}

}  // namespace qgc
