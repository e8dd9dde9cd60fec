#pragma once

// Pauli-distance lookup table: for every graph-basis label, the minimum
// size of a phase-free Pauli product that carries |0⟩ onto it, plus the
// diagonal distance. ⟨a|Q|b⟩ ≠ 0 exactly when Q's label shift is a ⊖ b, so
// the table is built from label shifts alone.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <thread>
#include <vector>

#include "qgc/graph.hpp"
#include "qgc/zmod.hpp"

namespace qgc {

/// Sentinel for "greater than the table cap".
inline constexpr int kAboveCap = std::numeric_limits<int>::max();

class DistanceTable {
 public:
  const Graph& graph() const noexcept { return graph_; }
  int cap() const noexcept { return cap_; }
  const LabelSpace& labels() const noexcept { return space_; }

  /// Minimum size reaching label `index` from 0, or kAboveCap. The zero
  /// label is kAboveCap by convention; see diagonal_distance().
  int entry(std::uint64_t index) const {
    const auto v = entries_.at(index);
    return v == kUnset ? kAboveCap : static_cast<int>(v);
  }
  int entry(const ModTuple& a) const { return entry(space_.index(a)); }

  /// Minimum size of a nonidentity product with zero label shift, or kAboveCap.
  int diagonal_distance() const noexcept { return diagonal_; }

  std::uint64_t size() const noexcept { return entries_.size(); }

 private:
  friend DistanceTable build_distance_table(const Graph& g, int cap, bool parallel, std::uint64_t mem);
  static constexpr std::uint8_t kUnset = 0xFF;

  DistanceTable(Graph g, int cap, LabelSpace space)
      : graph_(std::move(g)), cap_(cap), space_(space), entries_(space.size(), kUnset) {}

  Graph graph_;
  int cap_;
  LabelSpace space_;
  std::vector<std::uint8_t> entries_;
  int diagonal_ = kAboveCap;
};

namespace detail {

/// Label-shift index contributed by X^μ Z^ν on qudit l, for every pair code μ·D+ν.
inline std::vector<std::vector<std::uint64_t>> single_qudit_shifts(const Graph& g) {
  const int d = g.modulus();
  std::vector<std::vector<std::uint64_t>> shifts(g.n(), std::vector<std::uint64_t>(static_cast<std::size_t>(d) * d));
  for (int l = 0; l < g.n(); ++l) {
    for (int mu = 0; mu < d; ++mu) {
      for (int nu = 0; nu < d; ++nu) {
        const PauliProduct p(0, ModTuple::unit(d, g.n(), l, mu), ModTuple::unit(d, g.n(), l, nu));
        shifts[l][static_cast<std::size_t>(mu) * d + nu] = displacement(g, p).index();
      }
    }
  }
  return shifts;
}

/// Walks every phase-free product of size <= cap whose lowest base qudit is
/// `first`, recording the minimal size per reached label.
class ShiftWalker {
 public:
  ShiftWalker(const LabelSpace& space, const std::vector<std::vector<std::uint64_t>>& shifts, int cap,
              std::vector<std::uint8_t>& best, int& diagonal)
      : space_(space), shifts_(shifts), cap_(cap), n_(space.n()), pairs_(space.modulus() * space.modulus()), best_(best), diagonal_(diagonal) {}

  void walk_from(int first) {
    for (int code = 1; code < pairs_; ++code) visit(first, 1, shifts_[first][code]);
  }

 private:
  void visit(int last, int depth, std::uint64_t label) {
    if (label == 0) {
      diagonal_ = std::min(diagonal_, depth);
    } else if (best_[label] > depth) {
      best_[label] = static_cast<std::uint8_t>(depth);
    }
    if (depth == cap_) return;
    for (int l = last + 1; l < n_; ++l) {
      for (int code = 1; code < pairs_; ++code) visit(l, depth + 1, space_.add(label, shifts_[l][code]));
    }
  }

  const LabelSpace& space_;
  const std::vector<std::vector<std::uint64_t>>& shifts_;
  int cap_;
  int n_;
  int pairs_;
  std::vector<std::uint8_t>& best_;
  int& diagonal_;
};

}  // namespace detail

/// Enumerates all phase-free products of size 1..cap. With `parallel` the
/// enumeration is split by lowest base qudit across threads and merged by
/// minimum, which matches the sequential table exactly.
inline DistanceTable build_distance_table(const Graph& g, int cap, bool parallel = true, std::uint64_t mem = mem_cap()) {
  if (cap < 1 || cap > g.n()) throw InvalidArgument("distance table cap must satisfy 1 <= cap <= n");
  if (cap >= 0xFF) throw InvalidArgument("distance table cap too large");
  DistanceTable table(g, cap, LabelSpace(g.modulus(), g.n(), mem));
  const auto shifts = detail::single_qudit_shifts(g);
  const int n = g.n();

  unsigned workers = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
  if (workers <= 1) {
    detail::ShiftWalker walker(table.space_, shifts, cap, table.entries_, table.diagonal_);
    for (int first = 0; first < n; ++first) walker.walk_from(first);
    return table;
  }

  std::vector<std::vector<std::uint8_t>> partial(workers, std::vector<std::uint8_t>(table.entries_.size(), DistanceTable::kUnset));
  std::vector<int> diag(workers, kAboveCap);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        detail::ShiftWalker walker(table.space_, shifts, cap, partial[w], diag[w]);
        for (int first = static_cast<int>(w); first < n; first += static_cast<int>(workers)) walker.walk_from(first);
      });
    }
  }
  for (unsigned w = 0; w < workers; ++w) {
    for (std::size_t i = 0; i < table.entries_.size(); ++i) table.entries_[i] = std::min(table.entries_[i], partial[w][i]);
    table.diagonal_ = std::min(table.diagonal_, diag[w]);
  }
  return table;
}

/// Exact diagonal distance without a table: a product fixes every label
/// only if ν = −Γμ, so Δ' = min over μ ≠ 0 of |supp(μ) ∪ supp(Γμ)|.
inline int exact_diagonal_distance(const Graph& g, std::uint64_t mem = mem_cap()) {
  const LabelSpace space(g.modulus(), g.n(), mem);
  int best = kAboveCap;
  for (std::uint64_t i = 1; i < space.size(); ++i) {
    const auto mu = space.tuple(i);
    const auto shift = gamma_times(g, mu);
    int size = 0;
    for (int l = 0; l < g.n(); ++l) size += (mu[l] != 0 || shift[l] != 0) ? 1 : 0;
    best = std::min(best, size);
  }
  return best;
}

/// Δ(a, b) = entry[b ⊖ a]; the diagonal case a = b is rejected.
inline int pair_distance(const DistanceTable& t, const ModTuple& a, const ModTuple& b) {
  if (a == b) throw InvalidArgument("pair_distance needs distinct labels; use diagonal_distance()");
  return t.entry(subtract(b, a));
}

inline int pair_distance(const DistanceTable& t, std::uint64_t a, std::uint64_t b) {
  if (a == b) throw InvalidArgument("pair_distance needs distinct labels; use diagonal_distance()");
  return t.entry(t.labels().sub(b, a));
}

}  // namespace qgc
