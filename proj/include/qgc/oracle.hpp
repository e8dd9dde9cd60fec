#pragma once

// Dense state-vector ground truth for small n. Basis kets |j⟩ are indexed
// like graph-basis labels (vertex 1 most significant); ω = e^(2πi/D),
// Z|j⟩ = ω^j|j⟩ and X|j⟩ = |j−1⟩.

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qgc/code.hpp"
#include "qgc/config.hpp"
#include "qgc/graph.hpp"
#include "qgc/pauli.hpp"
#include "qgc/zmod.hpp"

namespace qgc {

using Complex = std::complex<double>;

inline constexpr double kOracleTolerance = 1e-9;

struct DenseState {
  int modulus = 0;
  int n = 0;
  std::vector<Complex> amplitudes;

  double norm() const {
    double s = 0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
  }
};

namespace detail {

inline std::vector<Complex> roots_of_unity(int d) {
  std::vector<Complex> w(d);
  for (int k = 0; k < d; ++k) w[k] = std::polar(1.0, 2 * std::numbers::pi * k / d);
  return w;
}

inline std::uint64_t oracle_dimension(int modulus, int n, std::uint64_t cap) {
  return checked_label_count(modulus, n, cap);
}

}  // namespace detail

inline Complex inner(const DenseState& a, const DenseState& b) {
  if (a.modulus != b.modulus || a.n != b.n) throw DimensionMismatch("dense states differ in shape");
  Complex s = 0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return s;
}

inline bool approx_equal(const DenseState& a, const DenseState& b, double tol = kOracleTolerance) {
  if (a.modulus != b.modulus || a.n != b.n) return false;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    if (std::abs(a.amplitudes[i] - b.amplitudes[i]) > tol) return false;
  }
  return true;
}

inline DenseState scaled(const DenseState& s, Complex factor) {
  DenseState out = s;
  for (auto& a : out.amplitudes) a *= factor;
  return out;
}

/// |G⟩: amplitude D^(−n/2) ω^(Σ_{l<m} Γ_lm j_l j_m) on |j⟩.
inline DenseState build_graph_state(const Graph& g, std::uint64_t cap = oracle_cap()) {
  const auto dim = detail::oracle_dimension(g.modulus(), g.n(), cap);
  const auto w = detail::roots_of_unity(g.modulus());
  const double scale = std::pow(static_cast<double>(g.modulus()), -0.5 * g.n());
  DenseState s{g.modulus(), g.n(), std::vector<Complex>(dim)};
  for (std::uint64_t j = 0; j < dim; ++j) {
    const auto t = ModTuple::from_index(g.modulus(), g.n(), j);
    Residue e = 0;
    for (int l = 0; l < g.n(); ++l) {
      for (int m = l + 1; m < g.n(); ++m) e = (e + g.weight(l, m) * t[l] * t[m]) % g.modulus();
    }
    s.amplitudes[j] = scale * w[e];
  }
  return s;
}

/// Exact matrix action of ω^λ X^μ Z^ν: |j⟩ ↦ ω^(λ + ν·j) |j − μ⟩.
inline DenseState apply_pauli_dense(const PauliProduct& p, const DenseState& psi) {
  if (p.modulus() != psi.modulus || p.n() != psi.n) throw DimensionMismatch("Pauli product and state differ in shape");
  const int d = psi.modulus;
  const auto w = detail::roots_of_unity(d);
  const LabelSpace space(d, psi.n, psi.amplitudes.size());
  const auto mu = p.xexp().index();
  const auto nu = p.zexp();
  DenseState out{d, psi.n, std::vector<Complex>(psi.amplitudes.size())};
  // Odometer over j tracking λ + ν·j. A digit step changes the exponent by
  // ν_l both on increment and on wrap, since −(D−1)ν_l ≡ ν_l.
  std::vector<Residue> digits(psi.n, 0);
  Residue e = p.phase();
  for (std::uint64_t j = 0; j < psi.amplitudes.size(); ++j) {
    out.amplitudes[space.sub(j, mu)] += w[e] * psi.amplitudes[j];
    for (int l = psi.n - 1; l >= 0; --l) {
      e = (e + nu[l]) % d;
      if (++digits[l] < static_cast<Residue>(d)) break;
      digits[l] = 0;
    }
  }
  return out;
}

/// Z^a|G⟩.
inline DenseState graph_basis_state(const Graph& g, const ModTuple& a, std::uint64_t cap = oracle_cap()) {
  check_compatible(g, a);
  return apply_pauli_dense(PauliProduct(0, ModTuple::zero(g.modulus(), g.n()), a), build_graph_state(g, cap));
}

/// ⟨a|v⟩ for every label a, from one pass of per-qudit discrete Fourier
/// sums: ⟨a|v⟩ = Σ_j ω^(−a·j) conj(G_j) v_j.
inline std::vector<Complex> graph_basis_coefficients(const DenseState& graph_state, const DenseState& v) {
  if (graph_state.modulus != v.modulus || graph_state.n != v.n) throw DimensionMismatch("dense states differ in shape");
  const int d = v.modulus;
  const auto w = detail::roots_of_unity(d);
  std::vector<Complex> cur(v.amplitudes.size()), next(v.amplitudes.size());
  for (std::size_t j = 0; j < cur.size(); ++j) cur[j] = std::conj(graph_state.amplitudes[j]) * v.amplitudes[j];
  std::vector<Complex> twiddle(static_cast<std::size_t>(d) * d), gathered(d);
  for (int k = 0; k < d; ++k) {
    for (int j = 0; j < d; ++j) twiddle[static_cast<std::size_t>(k) * d + j] = w[(d - (k * j) % d) % d];
  }
  const std::uint64_t ud = static_cast<std::uint64_t>(d);
  for (std::uint64_t stride = 1; stride < cur.size(); stride *= ud) {
    for (std::uint64_t block = 0; block < cur.size(); block += stride * ud) {
      for (std::uint64_t off = block; off < block + stride; ++off) {
        for (int j = 0; j < d; ++j) gathered[j] = cur[off + j * stride];
        for (int k = 0; k < d; ++k) {
          Complex s = 0;
          for (int j = 0; j < d; ++j) s += twiddle[static_cast<std::size_t>(k) * d + j] * gathered[j];
          next[off + k * stride] = s;
        }
      }
    }
    std::swap(cur, next);
  }
  return cur;
}

/// ⟨a|Q|b⟩ computed densely.
inline Complex dense_matrix_element(const Graph& g, const ModTuple& a, const PauliProduct& q, const ModTuple& b,
                                    std::uint64_t cap = oracle_cap()) {
  return inner(graph_basis_state(g, a, cap), apply_pauli_dense(q, graph_basis_state(g, b, cap)));
}

struct KlViolation {
  PauliProduct q;
  ModTuple c_q, c_r;
  Complex value;
};

struct KlReport {
  bool pass = false;
  /// Every checked f(Q) is zero.
  bool nondegenerate = false;
  std::uint64_t products_checked = 0;
  std::uint64_t nonzero_f = 0;
  std::optional<KlViolation> violation;
  std::string message;
};

/// For every phase-free Q with 1 ≤ size < δ, checks ⟨c_q|Q|c_r⟩ = f(Q)·δ_qr
/// over the labels in `words`.
inline KlReport kl_verify(const Graph& g, const std::vector<ModTuple>& words, int delta, std::uint64_t cap = oracle_cap()) {
  for (const auto& w : words) check_compatible(g, w);
  const auto graph_state = build_graph_state(g, cap);
  std::vector<DenseState> kets;
  kets.reserve(words.size());
  for (const auto& c : words) kets.push_back(apply_pauli_dense(PauliProduct(0, ModTuple::zero(g.modulus(), g.n()), c), graph_state));
  std::vector<std::uint64_t> idx;
  for (const auto& c : words) idx.push_back(c.index());

  KlReport r;
  r.nondegenerate = true;
  for (int s = 1; s < delta && s <= g.n(); ++s) {
    PauliEnumerator e(g.n(), g.modulus(), s);
    std::optional<PauliProduct> q;
    while (e.next(q)) {
      ++r.products_checked;
      std::optional<Complex> f;
      for (std::size_t col = 0; col < words.size(); ++col) {
        const auto coeff = graph_basis_coefficients(graph_state, apply_pauli_dense(*q, kets[col]));
        for (std::size_t row = 0; row < words.size(); ++row) {
          const auto v = coeff[idx[row]];
          bool bad = false;
          if (row != col) {
            bad = std::abs(v) > kOracleTolerance;
          } else if (!f) {
            f = v;
          } else {
            bad = std::abs(v - *f) > kOracleTolerance;
          }
          if (bad) {
            r.violation = KlViolation{*q, words[row], words[col], v};
            r.message = "<" + words[row].to_digits() + "| " + to_string(*q) + " |" + words[col].to_digits() + "> = " +
                        std::to_string(v.real()) + (v.imag() < 0 ? "" : "+") + std::to_string(v.imag()) + "i breaks the condition";
            r.nondegenerate = false;
            return r;
          }
        }
      }
      if (f && std::abs(*f) > kOracleTolerance) {
        ++r.nonzero_f;
        r.nondegenerate = false;
      }
    }
  }
  r.pass = true;
  r.message = "ok";
  return r;
}

inline KlReport kl_verify(const GraphCode& code, int delta, std::uint64_t cap = oracle_cap()) {
  return kl_verify(code.graph(), code.codewords(), delta, cap);
}

}  // namespace qgc
