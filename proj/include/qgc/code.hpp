#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qgc/distance.hpp"
#include "qgc/graph.hpp"
#include "qgc/zmod.hpp"

namespace qgc {

/// Quantum Singleton bound D^(n − 2(δ−1)); 0 when the exponent is negative.
inline std::uint64_t qs_bound(int n, int delta, int modulus) {
  if (delta < 1) throw InvalidArgument("delta must be >= 1");
  const int exponent = n - 2 * (delta - 1);
  if (exponent < 0) return 0;
  return ipow_saturating(static_cast<std::uint64_t>(modulus), exponent);
}

struct Additivity {
  bool additive = false;
  std::optional<GeneratorMatrix> generators;
};

/// Closure test under ⊕. Generators are chosen greedily: walk the words in
/// ascending order and keep each one not already in the running span.
inline Additivity is_additive(int modulus, int n, const std::vector<ModTuple>& words) {
  const LabelSpace space(modulus, n, UINT64_MAX - 1);
  std::unordered_set<std::uint64_t> members;
  for (const auto& w : words) members.insert(w.index());
  if (!members.contains(0)) return {};

  GeneratorMatrix gens(modulus, n);
  std::vector<std::uint64_t> group{0};
  std::unordered_set<std::uint64_t> in_group{0};
  std::vector<ModTuple> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& w : sorted) {
    const auto g = w.index();
    if (in_group.contains(g)) continue;
    gens.push_back(w);
    const std::size_t base = group.size();
    std::uint64_t step = g;
    while (!in_group.contains(step)) {
      for (std::size_t i = 0; i < base; ++i) {
        const auto x = space.add(group[i], step);
        if (!members.contains(x)) return {};
        if (in_group.insert(x).second) group.push_back(x);
      }
      step = space.add(step, g);
    }
  }
  if (group.size() != members.size()) return {};
  return {true, std::move(gens)};
}

/// A graph code: codeword labels (ascending, zero included) on a graph with a
/// claimed distance. Additivity and generators are derived on construction.
class GraphCode {
 public:
  GraphCode(Graph graph, int delta, std::vector<ModTuple> codewords, bool exhaustive = true)
      : graph_(std::move(graph)), delta_(delta), codewords_(std::move(codewords)), exhaustive_(exhaustive) {
    if (delta_ < 1) throw InvalidArgument("delta must be >= 1");
    for (const auto& c : codewords_) check_compatible(graph_, c);
    std::sort(codewords_.begin(), codewords_.end());
    if (std::adjacent_find(codewords_.begin(), codewords_.end()) != codewords_.end()) {
      throw InvalidArgument("codewords must be pairwise distinct");
    }
    if (codewords_.empty() || !codewords_.front().is_zero()) throw InvalidArgument("codewords must include the zero label");
    auto add = is_additive(graph_.modulus(), graph_.n(), codewords_);
    additive_ = add.additive;
    generators_ = std::move(add.generators);
  }

  const Graph& graph() const noexcept { return graph_; }
  int n() const noexcept { return graph_.n(); }
  int modulus() const noexcept { return graph_.modulus(); }
  int delta() const noexcept { return delta_; }
  std::size_t K() const noexcept { return codewords_.size(); }
  const std::vector<ModTuple>& codewords() const noexcept { return codewords_; }
  bool exhaustive() const noexcept { return exhaustive_; }
  bool additive() const noexcept { return additive_; }
  const std::optional<GeneratorMatrix>& generators() const noexcept { return generators_; }

  std::uint64_t qs_bound() const { return qgc::qs_bound(n(), delta_, modulus()); }
  bool qs_saturated() const { return K() == qs_bound(); }

 private:
  Graph graph_;
  int delta_;
  std::vector<ModTuple> codewords_;
  bool exhaustive_;
  bool additive_ = false;
  std::optional<GeneratorMatrix> generators_;
};

inline Additivity is_additive(const GraphCode& code) { return is_additive(code.modulus(), code.n(), code.codewords()); }

/// Some phase-free product of exactly `size` qudits whose label shift is
/// `shift`, if one exists.
inline std::optional<PauliProduct> find_pauli_with_shift(const Graph& g, const ModTuple& shift, int size) {
  PauliEnumerator e(g.n(), g.modulus(), size);
  std::optional<PauliProduct> p;
  while (e.next(p)) {
    if (displacement(g, *p) == shift && !p->is_identity()) return p;
  }
  return std::nullopt;
}

struct DistanceReport {
  bool pass = false;
  int delta = 0;
  int diagonal_distance = kAboveCap;
  std::string message;
  /// A codeword pair closer than delta, when the pair check failed.
  std::optional<std::pair<ModTuple, ModTuple>> pair;
  /// Label shift of the failing witness (c_r ⊖ c_q, or zero for the diagonal).
  std::optional<ModTuple> shift;
  /// Size of the witness and one product realising it.
  int witness_size = 0;
  std::optional<PauliProduct> witness;
};

/// Checks Δ' ≥ δ and Δ(c_q, c_r) ≥ δ for every pair of distinct labels in
/// `words` using a table with cap ≥ δ − 1. The labels need not form a valid
/// GraphCode. For additive sets the pair differences are exactly the nonzero
/// members, so only those are looked up.
inline DistanceReport assert_distance(const DistanceTable& table, int delta, const std::vector<ModTuple>& words) {
  if (table.cap() < delta - 1) {
    throw InvalidArgument("table cap " + std::to_string(table.cap()) + " is below delta - 1 = " + std::to_string(delta - 1));
  }
  const auto& g = table.graph();
  for (const auto& w : words) check_compatible(g, w);
  DistanceReport r;
  r.delta = delta;
  r.diagonal_distance = table.diagonal_distance();
  auto describe = [&](int size, const ModTuple& shift) {
    r.witness_size = size;
    r.shift = shift;
    r.witness = find_pauli_with_shift(g, shift, size);
  };

  if (table.diagonal_distance() < delta) {
    describe(table.diagonal_distance(), ModTuple::zero(g.modulus(), g.n()));
    r.message = "diagonal distance " + std::to_string(table.diagonal_distance()) + " < delta " + std::to_string(delta);
    return r;
  }

  const auto& space = table.labels();
  std::vector<std::uint64_t> idx;
  idx.reserve(words.size());
  for (const auto& w : words) idx.push_back(w.index());

  auto fail_pair = [&](std::size_t q, std::size_t rr, int dist) {
    r.pair = std::make_pair(words[q], words[rr]);
    describe(dist, subtract(words[rr], words[q]));
    r.message = "codewords " + words[q].to_digits() + " and " + words[rr].to_digits() + " are at distance " + std::to_string(dist) + " < delta " +
                std::to_string(delta);
  };

  const auto zero = std::find(idx.begin(), idx.end(), std::uint64_t{0});
  if (zero != idx.end() && is_additive(g.modulus(), g.n(), words).additive) {
    const auto z = static_cast<std::size_t>(zero - idx.begin());
    for (std::size_t q = 0; q < idx.size(); ++q) {
      if (q == z) continue;
      const int dist = table.entry(idx[q]);
      if (dist < delta) {
        fail_pair(z, q, dist);
        return r;
      }
    }
  } else {
    for (std::size_t q = 0; q < idx.size(); ++q) {
      for (std::size_t s = q + 1; s < idx.size(); ++s) {
        if (idx[q] == idx[s]) {
          r.pair = std::make_pair(words[q], words[s]);
          r.message = "codeword " + words[q].to_digits() + " is listed twice";
          return r;
        }
        const int dist = table.entry(space.sub(idx[s], idx[q]));
        if (dist < delta) {
          fail_pair(q, s, dist);
          return r;
        }
      }
    }
  }
  r.pass = true;
  r.message = "ok";
  return r;
}

inline DistanceReport assert_distance(const GraphCode& code, const DistanceTable& table) {
  if (table.graph() != code.graph()) throw InvalidArgument("distance table was built for a different graph");
  return assert_distance(table, code.delta(), code.codewords());
}

/// Builds a table with cap δ − 1 and runs assert_distance.
inline DistanceReport assert_distance(const Graph& g, int delta, const std::vector<ModTuple>& words, bool parallel = true) {
  if (delta < 1) throw InvalidArgument("delta must be >= 1");
  if (delta < 2) {
    DistanceReport r;
    r.delta = delta;
    for (std::size_t q = 0; q < words.size(); ++q) {
      for (std::size_t s = q + 1; s < words.size(); ++s) {
        if (words[q] == words[s]) {
          r.pair = std::make_pair(words[q], words[s]);
          r.message = "codeword " + words[q].to_digits() + " is listed twice";
          return r;
        }
      }
    }
    r.pass = true;
    r.message = "ok";
    return r;
  }
  return assert_distance(build_distance_table(g, delta - 1, parallel), delta, words);
}

inline DistanceReport assert_distance(const GraphCode& code, bool parallel = true) {
  return assert_distance(code.graph(), code.delta(), code.codewords(), parallel);
}

}  // namespace qgc
