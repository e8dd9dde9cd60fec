#pragma once

// Reference implementations used as oracles by the tests. They are written
// from the definitions directly and share no code with the library beyond
// the value types.

#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "qgc/qgc.hpp"

namespace ref {

using Complex = std::complex<double>;

inline std::vector<int> digits(int d, int n, std::uint64_t index) {
  std::vector<int> out(n);
  for (int l = n - 1; l >= 0; --l) {
    out[l] = static_cast<int>(index % d);
    index /= d;
  }
  return out;
}

inline std::uint64_t index_of(int d, const std::vector<int>& t) {
  std::uint64_t i = 0;
  for (int v : t) i = i * d + static_cast<std::uint64_t>(((v % d) + d) % d);
  return i;
}

inline std::uint64_t pow_u(int d, int n) {
  std::uint64_t p = 1;
  for (int i = 0; i < n; ++i) p *= d;
  return p;
}

inline Complex omega(int d, long long k) {
  k %= d;
  if (k < 0) k += d;
  return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / d);
}

/// ⟨j|a⟩ for the graph-basis state Z^a|G⟩.
inline Complex amplitude(const qgc::Graph& g, const std::vector<int>& a, const std::vector<int>& j) {
  const int n = g.n(), d = g.modulus();
  long long e = 0;
  for (int l = 0; l < n; ++l) {
    e += static_cast<long long>(a[l]) * j[l];
    for (int m = l + 1; m < n; ++m) e += static_cast<long long>(g.weight(l, m)) * j[l] * j[m];
  }
  return omega(d, e) / std::pow(static_cast<double>(d), n / 2.0);
}

inline std::vector<Complex> state(const qgc::Graph& g, const std::vector<int>& a) {
  const auto dim = pow_u(g.modulus(), g.n());
  std::vector<Complex> v(dim);
  for (std::uint64_t j = 0; j < dim; ++j) v[j] = amplitude(g, a, digits(g.modulus(), g.n(), j));
  return v;
}

/// ω^λ ∏ X^μ Z^ν acting on a vector, one qudit at a time with explicit
/// matrices X = Σ|j⟩⟨j+1| and Z = diag(ω^j), Z applied first.
inline std::vector<Complex> apply(const qgc::PauliProduct& p, std::vector<Complex> v) {
  const int d = p.modulus(), n = p.n();
  const auto dim = v.size();
  for (int l = 0; l < n; ++l) {
    const std::uint64_t stride = pow_u(d, n - 1 - l);
    for (unsigned k = 0; k < p.zexp()[l]; ++k) {
      for (std::uint64_t i = 0; i < dim; ++i) v[i] *= omega(d, static_cast<long long>((i / stride) % d));
    }
    for (unsigned k = 0; k < p.xexp()[l]; ++k) {
      // (X v)[j] = v[j+1]
      std::vector<Complex> w(dim);
      for (std::uint64_t i = 0; i < dim; ++i) {
        const auto dj = (i / stride) % d;
        const auto up = i - dj * stride + ((dj + 1) % d) * stride;
        w[i] = v[up];
      }
      v = std::move(w);
    }
  }
  for (auto& x : v) x *= omega(d, p.phase());
  return v;
}

inline Complex inner(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

/// Smallest s ≤ cap with ⟨target|Q|0⟩ ≠ 0 for some size-s Q, else 0.
inline int dense_min_size(const qgc::Graph& g, const std::vector<int>& target, int cap) {
  const auto g0 = state(g, std::vector<int>(g.n(), 0));
  const auto t = state(g, target);
  for (int s = 1; s <= cap; ++s) {
    for (const auto& q : qgc::enumerate_by_size(g.n(), g.modulus(), s)) {
      if (std::abs(inner(t, apply(q, g0))) > 1e-9) return s;
    }
  }
  return 0;
}

/// {s : s·c ≡ 0 for every c}, by enumeration.
inline std::set<std::uint64_t> brute_dual(int d, int n, const std::vector<std::vector<int>>& code) {
  std::set<std::uint64_t> out;
  for (std::uint64_t i = 0; i < pow_u(d, n); ++i) {
    const auto s = digits(d, n, i);
    bool ok = true;
    for (const auto& c : code) {
      long long dot = 0;
      for (int l = 0; l < n; ++l) dot += static_cast<long long>(s[l]) * c[l];
      if (dot % d != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(i);
  }
  return out;
}

/// Closure of a set of tuples under addition, by repeated sums.
inline std::set<std::uint64_t> brute_span(int d, int n, const std::vector<std::vector<int>>& gens) {
  std::set<std::uint64_t> out{0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> cur(out.begin(), out.end());
    for (auto x : cur) {
      const auto a = digits(d, n, x);
      for (const auto& g : gens) {
        std::vector<int> s(n);
        for (int l = 0; l < n; ++l) s[l] = (a[l] + g[l]) % d;
        grew |= out.insert(index_of(d, s)).second;
      }
    }
  }
  return out;
}

/// Clique number by subset enumeration (≤ 20 nodes).
inline std::size_t brute_clique_number(const qgc::BitGraph& g) {
  const std::size_t n = g.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    if (k <= best) continue;
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u) {
      if (!(mask >> u & 1u)) continue;
      for (std::size_t v = u + 1; v < n && ok; ++v) {
        if ((mask >> v & 1u) && !g.adjacent(u, v)) ok = false;
      }
    }
    if (ok) best = k;
  }
  return best;
}

inline qgc::Graph random_graph(std::mt19937& rng, int n, int d) {
  qgc::Graph g(n, d);
  for (int l = 0; l < n; ++l) {
    for (int m = l + 1; m < n; ++m) g.set_edge(l, m, static_cast<qgc::Residue>(rng() % d));
  }
  return g;
}

inline qgc::ModTuple random_tuple(std::mt19937& rng, int d, int n) {
  std::vector<qgc::Residue> e(n);
  for (auto& x : e) x = static_cast<qgc::Residue>(rng() % d);
  return qgc::ModTuple(d, std::move(e));
}

inline qgc::PauliProduct random_pauli(std::mt19937& rng, int d, int n) {
  return qgc::PauliProduct(static_cast<qgc::Residue>(rng() % d), random_tuple(rng, d, n), random_tuple(rng, d, n));
}

inline std::vector<int> as_ints(const qgc::ModTuple& t) {
  return std::vector<int>(t.entries().begin(), t.entries().end());
}

inline qgc::ModTuple t(int d, const std::string& digits) { return qgc::ModTuple::from_digits(d, digits); }

}  // namespace ref
