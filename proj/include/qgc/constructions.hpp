#pragma once

// Closed-form codes: the bipartition construction, star-graph codes for odd
// n, and the seven-generator additive code on the 16-vertex hypercube.

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <vector>

#include "qgc/code.hpp"
#include "qgc/graph.hpp"

namespace qgc {

/// Vertices are 0-based; V2 is the complement of V1.
struct PartitionSpec {
  Graph graph;
  std::vector<int> v1;
};

inline std::vector<int> complement(int n, const std::vector<int>& part) {
  std::vector<char> in(n, 0);
  for (int v : part) in[v] = 1;
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

/// Throws PreconditionError naming the first vertex (1-based) whose edge
/// weight into the other part is zero or shares a factor with D.
inline void validate_partition(const PartitionSpec& spec) {
  const auto& g = spec.graph;
  const int n = g.n();
  std::vector<char> in(n, 0);
  for (int v : spec.v1) {
    if (v < 0 || v >= n) throw InvalidArgument("partition vertex " + std::to_string(v + 1) + " out of range");
    if (in[v]) throw InvalidArgument("partition vertex " + std::to_string(v + 1) + " listed twice");
    in[v] = 1;
  }
  if (spec.v1.empty() || spec.v1.size() == static_cast<std::size_t>(n)) {
    throw PreconditionError("V1 must be a nonempty proper subset of the vertices");
  }
  for (int v = 0; v < n; ++v) {
    std::uint64_t crossing = 0;
    for (int m = 0; m < n; ++m) {
      if (in[m] != in[v]) crossing += g.weight(v, m);
    }
    const auto gv = static_cast<int>(crossing % static_cast<std::uint64_t>(g.modulus()));
    if (gv == 0 || std::gcd(gv, g.modulus()) != 1) {
      throw PreconditionError("vertex " + std::to_string(v + 1) + " has crossing weight " + std::to_string(crossing) +
                              ", not a unit mod " + std::to_string(g.modulus()));
    }
  }
}

/// Labels whose entries sum to zero on V1 and on V2 separately; K = D^(n−2), δ = 2.
inline GraphCode partition_code(const PartitionSpec& spec) {
  validate_partition(spec);
  const auto& g = spec.graph;
  const int d = g.modulus();
  const LabelSpace space(d, g.n());
  std::vector<char> in(g.n(), 0);
  for (int v : spec.v1) in[v] = 1;
  std::vector<ModTuple> words;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    auto t = space.tuple(i);
    std::uint64_t s1 = 0, s2 = 0;
    for (int l = 0; l < g.n(); ++l) (in[l] ? s1 : s2) += t[l];
    if (s1 % d == 0 && s2 % d == 0) words.push_back(std::move(t));
  }
  return GraphCode(g, 2, std::move(words));
}

/// The default bipartition: the first ⌊n/2⌋ vertices.
inline PartitionSpec bar_partition(const Graph& g) {
  std::vector<int> v1(g.n() / 2);
  std::iota(v1.begin(), v1.end(), 0);
  return {g, std::move(v1)};
}

/// Peripheral weights used by star_code_odd: even r ≤ (n−3)/2 together with
/// n−1−r for odd r ≤ (n−3)/2.
inline std::vector<int> star_weight_set(int n) {
  if (n < 3 || n % 2 == 0) throw InvalidArgument("star code needs odd n >= 3");
  std::vector<int> r;
  for (int k = 0; k <= (n - 3) / 2; ++k) r.push_back(k % 2 == 0 ? k : n - 1 - k);
  std::sort(r.begin(), r.end());
  return r;
}

/// Qubit code on the star with hub vertex 1: hub entry 0 and peripheral
/// weight in star_weight_set(n).
inline GraphCode star_code_odd(int n) {
  const auto weights = star_weight_set(n);
  const auto g = build_family(Family::kStar, n, 2);
  const LabelSpace space(2, n);
  std::vector<ModTuple> words;
  // With vertex 1 most significant, hub entry 0 means index < 2^(n−1).
  for (std::uint64_t i = 0; i < space.size() / 2; ++i) {
    const int w = std::popcount(i);
    if (std::binary_search(weights.begin(), weights.end(), w)) words.push_back(space.tuple(i));
  }
  return GraphCode(g, 2, std::move(words));
}

/// Closed-form size 2^(n−2) − C(n−1, (n−1)/2)/2.
inline std::uint64_t star_code_size(int n) {
  if (n < 3 || n % 2 == 0) throw InvalidArgument("star code needs odd n >= 3");
  std::uint64_t c = 1;
  const int m = n - 1, k = m / 2;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(m - k + i) / static_cast<std::uint64_t>(i);
  return (std::uint64_t{1} << (n - 2)) - c / 2;
}

inline const std::vector<std::string>& hypercube16_generator_digits() {
  static const std::vector<std::string> rows{
      "0000000000001111", "0000000000110011", "0000000011000011", "0000001101000100",
      "0000110000010001", "0011000001000100", "1100000000010001",
  };
  return rows;
}

/// ((16, 128, 4))_2 additive code on the 16-vertex hypercube.
inline GraphCode hypercube16_code() {
  GeneratorMatrix gens(2, 16);
  for (const auto& row : hypercube16_generator_digits()) gens.push_back(ModTuple::from_digits(2, row));
  return GraphCode(build_family(Family::kHypercube, 16, 2), 4, span(gens));
}

}  // namespace qgc
