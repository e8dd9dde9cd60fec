#pragma once

// Weighted graphs for qudit graph states, the standard graph families, and
// the action of Pauli products on graph-basis labels.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qgc/pauli.hpp"
#include "qgc/zmod.hpp"

namespace qgc {

/// n vertices, modulus D, symmetric adjacency matrix of edge multiplicities
/// in [0, D−1] with zero diagonal. Vertices are 0-based in the API and
/// 1-based in text.
class Graph {
 public:
  Graph(int n, int modulus) : n_(n), d_(modulus), gamma_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1) throw InvalidArgument("graph needs at least one vertex");
    if (modulus < 2) throw InvalidArgument("modulus must be >= 2");
  }

  Graph(int n, int modulus, std::vector<Residue> adjacency) : Graph(n, modulus) {
    if (adjacency.size() != gamma_.size()) throw DimensionMismatch("adjacency matrix must be n*n");
    gamma_ = std::move(adjacency);
    for (int l = 0; l < n_; ++l) {
      if (weight(l, l) != 0) throw InvalidArgument("self loop at vertex " + std::to_string(l + 1));
      for (int m = 0; m < n_; ++m) {
        if (weight(l, m) >= static_cast<Residue>(d_)) throw InvalidArgument("edge weight >= D");
        if (weight(l, m) != weight(m, l)) throw InvalidArgument("adjacency matrix is not symmetric");
      }
    }
  }

  int n() const noexcept { return n_; }
  int modulus() const noexcept { return d_; }
  Residue weight(int l, int m) const { return gamma_[static_cast<std::size_t>(l) * n_ + m]; }

  void set_edge(int l, int m, Residue w) {
    if (l == m) throw InvalidArgument("self loop at vertex " + std::to_string(l + 1));
    if (l < 0 || m < 0 || l >= n_ || m >= n_) throw InvalidArgument("vertex out of range");
    if (w >= static_cast<Residue>(d_)) throw InvalidArgument("edge weight " + std::to_string(w) + " >= D");
    gamma_[static_cast<std::size_t>(l) * n_ + m] = w;
    gamma_[static_cast<std::size_t>(m) * n_ + l] = w;
  }

  /// Vertices joined to `l` by at least one edge.
  std::vector<int> neighbors(int l) const {
    std::vector<int> out;
    for (int m = 0; m < n_; ++m) {
      if (weight(l, m) != 0) out.push_back(m);
    }
    return out;
  }

  /// Column l of Γ as a tuple: the label shift produced by X_l.
  ModTuple column(int l) const {
    std::vector<Residue> v(n_);
    for (int m = 0; m < n_; ++m) v[m] = weight(m, l);
    return ModTuple(d_, std::move(v));
  }

  const std::vector<Residue>& adjacency() const noexcept { return gamma_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  int d_;
  std::vector<Residue> gamma_;
};

enum class Family { kBar, kStar, kCycle, kWheel, kHypercube };

inline Family parse_family(const std::string& name) {
  if (name == "bar") return Family::kBar;
  if (name == "star") return Family::kStar;
  if (name == "cycle") return Family::kCycle;
  if (name == "wheel") return Family::kWheel;
  if (name == "hypercube") return Family::kHypercube;
  throw InvalidArgument("unknown graph family '" + name + "'");
}

inline std::string family_name(Family f) {
  switch (f) {
    case Family::kBar: return "bar";
    case Family::kStar: return "star";
    case Family::kCycle: return "cycle";
    case Family::kWheel: return "wheel";
    case Family::kHypercube: return "hypercube";
  }
  return "?";
}

struct FamilyOptions {
  /// Cycle only: give edge {1,2} weight 2 (needs D >= 3).
  bool double_edge = false;
};

/// Builds a member of a graph family with a fixed vertex numbering:
///   bar       V1 = 1..⌊n/2⌋, V2 = the rest, i ~ i+⌊n/2⌋; odd n adds ⌊n/2⌋ ~ n
///   star      vertex 1 central
///   cycle     ring order 1 ~ 2 ~ ... ~ n ~ 1
///   wheel     vertex 1 hub, 2..n the rim cycle
///   hypercube vertex 1+x for binary coordinate x, edges at Hamming distance 1
inline Graph build_family(Family family, int n, int modulus, FamilyOptions opts = {}) {
  auto unsupported = [&](const std::string& why) {
    return InvalidArgument(family_name(family) + " with n=" + std::to_string(n) + ": " + why);
  };
  if (opts.double_edge && family != Family::kCycle) throw unsupported("double edge is only defined for cycles");
  Graph g(n, modulus);
  switch (family) {
    case Family::kBar: {
      if (n < 2) throw unsupported("needs n >= 2");
      const int half = n / 2;
      for (int i = 0; i < half; ++i) g.set_edge(i, i + half, 1);
      if (n % 2 == 1) g.set_edge(half - 1, n - 1, 1);
      break;
    }
    case Family::kStar: {
      if (n < 3) throw unsupported("needs n >= 3");
      for (int m = 1; m < n; ++m) g.set_edge(0, m, 1);
      break;
    }
    case Family::kCycle: {
      if (n < 3) throw unsupported("needs n >= 3");
      for (int i = 0; i < n; ++i) g.set_edge(i, (i + 1) % n, 1);
      if (opts.double_edge) {
        if (modulus < 3) throw unsupported("double edge needs D >= 3");
        g.set_edge(0, 1, 2);
      }
      break;
    }
    case Family::kWheel: {
      if (n < 4) throw unsupported("needs n >= 4");
      for (int m = 1; m < n; ++m) g.set_edge(0, m, 1);
      const int rim = n - 1;
      for (int i = 0; i < rim; ++i) g.set_edge(1 + i, 1 + (i + 1) % rim, 1);
      break;
    }
    case Family::kHypercube: {
      if (n < 2 || (n & (n - 1)) != 0) throw unsupported("needs n a power of two, n >= 2");
      for (int x = 0; x < n; ++x) {
        for (int bit = 1; bit < n; bit <<= 1) {
          if ((x & bit) == 0) g.set_edge(x, x | bit, 1);
        }
      }
      break;
    }
  }
  return g;
}

/// 1 + the minimum number of neighbors over all vertices; an upper bound on
/// the diagonal distance.
inline int coordination_bound(const Graph& g) {
  int best = g.n();
  for (int l = 0; l < g.n(); ++l) best = std::min(best, static_cast<int>(g.neighbors(l).size()));
  return best + 1;
}

inline void check_compatible(const Graph& g, const PauliProduct& p) {
  if (g.n() != p.n() || g.modulus() != p.modulus()) throw DimensionMismatch("Pauli product does not match graph");
}

inline void check_compatible(const Graph& g, const ModTuple& a) {
  if (g.n() != a.size() || g.modulus() != a.modulus()) throw DimensionMismatch("label does not match graph");
}

/// Γμ (mod D).
inline ModTuple gamma_times(const Graph& g, const ModTuple& mu) {
  check_compatible(g, mu);
  const auto d = static_cast<std::uint64_t>(g.modulus());
  std::vector<Residue> v(g.n());
  for (int l = 0; l < g.n(); ++l) {
    std::uint64_t s = 0;
    for (int m = 0; m < g.n(); ++m) s += static_cast<std::uint64_t>(g.weight(l, m)) * mu[m];
    v[l] = static_cast<Residue>(s % d);
  }
  return ModTuple(g.modulus(), std::move(v));
}

/// Σ_{l<m} Γ_lm μ_l μ_m (mod D).
inline Residue edge_form(const Graph& g, const ModTuple& mu) {
  check_compatible(g, mu);
  const auto d = static_cast<std::uint64_t>(g.modulus());
  std::uint64_t s = 0;
  for (int l = 0; l < g.n(); ++l) {
    if (mu[l] == 0) continue;
    for (int m = l + 1; m < g.n(); ++m) s = (s + static_cast<std::uint64_t>(g.weight(l, m)) * mu[l] % d * mu[m]) % d;
  }
  return static_cast<Residue>(s);
}

/// Label shift ν ⊕ Γμ: P maps graph-basis label a to a ⊕ shift up to phase.
inline ModTuple displacement(const Graph& g, const PauliProduct& p) {
  check_compatible(g, p);
  return add(p.zexp(), gamma_times(g, p.xexp()));
}

/// P|a⟩ = w^phase |a ⊕ ν ⊕ Γμ⟩ with phase = λ + μ·(ν ⊕ a) + Σ_{l<m} Γ_lm μ_l μ_m.
/// Z^ν shifts the label first; then each X_l contributes w^{b_l} for the
/// current label b and shifts it by column l of Γ, which leaves b_l alone.
inline std::pair<ModTuple, Residue> apply_pauli_symbolic(const Graph& g, const PauliProduct& p, const ModTuple& a) {
  check_compatible(g, p);
  check_compatible(g, a);
  const auto d = static_cast<Residue>(g.modulus());
  const ModTuple shifted = add(a, p.zexp());
  const Residue phase = (p.phase() + dot(p.xexp(), shifted) + edge_form(g, p.xexp())) % d;
  return {add(shifted, gamma_times(g, p.xexp())), phase};
}

/// Canonical text: "D n" then n rows of space-separated weights, each line
/// newline-terminated.
inline std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.modulus()) + " " + std::to_string(g.n()) + "\n";
  for (int l = 0; l < g.n(); ++l) {
    for (int m = 0; m < g.n(); ++m) {
      if (m > 0) out.push_back(' ');
      out += std::to_string(g.weight(l, m));
    }
    out.push_back('\n');
  }
  return out;
}

/// Parses the text format; lines starting with '#' and blank lines are
/// skipped. Errors carry the 1-based line number of the offending line.
inline Graph parse_graph(const std::string& text) {
  using Kind = ParseError::Kind;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<std::pair<int, std::string>> content;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    content.emplace_back(lineno, line);
  }

  auto parse_ints = [](const std::string& s, std::vector<long long>& out) {
    std::istringstream ls(s);
    std::string tok;
    while (ls >> tok) {
      std::size_t pos = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &pos);
      } catch (...) {
        return false;
      }
      if (pos != tok.size()) return false;
      out.push_back(v);
    }
    return true;
  };

  if (content.empty()) throw ParseError(Kind::kHeader, lineno, "missing header 'D n'");
  std::vector<long long> header;
  const int header_line = content[0].first;
  if (!parse_ints(content[0].second, header) || header.size() != 2 || header[0] < 2 || header[1] < 1) {
    throw ParseError(Kind::kHeader, header_line, "malformed header, expected 'D n' with D >= 2 and n >= 1");
  }
  const int d = static_cast<int>(header[0]);
  const int n = static_cast<int>(header[1]);
  if (content.size() - 1 < static_cast<std::size_t>(n)) {
    throw ParseError(Kind::kRow, lineno + 1, "expected " + std::to_string(n) + " matrix rows, found " + std::to_string(content.size() - 1));
  }
  if (content.size() - 1 > static_cast<std::size_t>(n)) {
    throw ParseError(Kind::kRow, content[n + 1].first, "unexpected extra row");
  }

  std::vector<Residue> gamma(static_cast<std::size_t>(n) * n);
  std::vector<int> row_line(n);
  for (int l = 0; l < n; ++l) {
    const auto& [ln, s] = content[l + 1];
    row_line[l] = ln;
    std::vector<long long> row;
    if (!parse_ints(s, row) || row.size() != static_cast<std::size_t>(n)) {
      throw ParseError(Kind::kRow, ln, "row " + std::to_string(l + 1) + " must hold " + std::to_string(n) + " integers");
    }
    for (int m = 0; m < n; ++m) {
      if (row[m] < 0 || row[m] >= d) {
        throw ParseError(Kind::kRange, ln, "entry " + std::to_string(row[m]) + " at column " + std::to_string(m + 1) + " is outside [0, D-1]");
      }
      gamma[static_cast<std::size_t>(l) * n + m] = static_cast<Residue>(row[m]);
    }
    if (row[l] != 0) throw ParseError(Kind::kDiagonal, ln, "nonzero diagonal entry at vertex " + std::to_string(l + 1));
  }
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < l; ++m) {
      if (gamma[static_cast<std::size_t>(l) * n + m] != gamma[static_cast<std::size_t>(m) * n + l]) {
        throw ParseError(Kind::kAsymmetric, row_line[l],
                         "entry (" + std::to_string(l + 1) + "," + std::to_string(m + 1) + ") differs from (" + std::to_string(m + 1) + "," +
                             std::to_string(l + 1) + ")");
      }
    }
  }
  return Graph(n, d, std::move(gamma));
}

}  // namespace qgc
