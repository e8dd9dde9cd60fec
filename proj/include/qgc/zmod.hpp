#pragma once

// Arithmetic and linear algebra over the residue ring Z_D: tuples, subgroup
// spans, generator-matrix diagonalization and dual subgroups. Nothing here
// assumes D is prime.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qgc/config.hpp"
#include "qgc/error.hpp"

namespace qgc {

using Residue = std::uint32_t;

/// Length-n tuple of residues mod D. Entry 0 is vertex 1, the most
/// significant digit of the label index.
class ModTuple {
 public:
  ModTuple() = default;

  ModTuple(int modulus, std::vector<Residue> entries) : modulus_(modulus), entries_(std::move(entries)) {
    if (modulus_ < 2) throw InvalidArgument("modulus must be >= 2, got " + std::to_string(modulus_));
    if (entries_.empty()) throw InvalidArgument("tuple length must be >= 1");
    for (auto e : entries_) {
      if (e >= static_cast<Residue>(modulus_)) {
        throw InvalidArgument("entry " + std::to_string(e) + " out of range for modulus " + std::to_string(modulus_));
      }
    }
  }

  static ModTuple zero(int modulus, int n) { return ModTuple(modulus, std::vector<Residue>(n, 0)); }

  /// e_l scaled by `value`; `l` is 0-based.
  static ModTuple unit(int modulus, int n, int l, Residue value = 1) {
    std::vector<Residue> v(n, 0);
    v.at(l) = value % modulus;
    return ModTuple(modulus, std::move(v));
  }

  /// Reduces arbitrary integers mod D.
  static ModTuple reduce(int modulus, std::span<const long long> values) {
    std::vector<Residue> v(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      long long r = values[i] % modulus;
      if (r < 0) r += modulus;
      v[i] = static_cast<Residue>(r);
    }
    return ModTuple(modulus, std::move(v));
  }

  static ModTuple from_index(int modulus, int n, std::uint64_t index) {
    std::vector<Residue> v(n, 0);
    for (int l = n - 1; l >= 0; --l) {
      v[l] = static_cast<Residue>(index % modulus);
      index /= modulus;
    }
    return ModTuple(modulus, std::move(v));
  }

  /// Parses a digit string such as "01101" (digits 0-9 then a-z).
  static ModTuple from_digits(int modulus, const std::string& text) {
    std::vector<Residue> v;
    v.reserve(text.size());
    for (char ch : text) {
      int d = -1;
      if (ch >= '0' && ch <= '9') d = ch - '0';
      else if (ch >= 'a' && ch <= 'z') d = ch - 'a' + 10;
      if (d < 0 || d >= modulus) throw InvalidArgument("bad digit '" + std::string(1, ch) + "' in \"" + text + "\"");
      v.push_back(static_cast<Residue>(d));
    }
    return ModTuple(modulus, std::move(v));
  }

  int modulus() const noexcept { return modulus_; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }
  Residue operator[](int l) const { return entries_[l]; }
  std::span<const Residue> entries() const noexcept { return entries_; }

  bool is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](Residue e) { return e == 0; });
  }

  /// Σ a_l D^{n-l}: vertex 1 most significant. Requires D^n < 2^64.
  std::uint64_t index() const {
    std::uint64_t idx = 0;
    for (auto e : entries_) idx = idx * static_cast<std::uint64_t>(modulus_) + e;
    return idx;
  }

  std::string to_digits() const {
    if (modulus_ > 36) throw InvalidArgument("digit rendering supports D <= 36");
    std::string s;
    s.reserve(entries_.size());
    for (auto e : entries_) s.push_back(e < 10 ? static_cast<char>('0' + e) : static_cast<char>('a' + e - 10));
    return s;
  }

  friend bool operator==(const ModTuple& a, const ModTuple& b) = default;
  friend std::strong_ordering operator<=>(const ModTuple& a, const ModTuple& b) {
    if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  int modulus_ = 2;
  std::vector<Residue> entries_;
};

namespace detail {

inline void check_compatible(const ModTuple& a, const ModTuple& b) {
  if (a.modulus() != b.modulus() || a.size() != b.size()) {
    throw DimensionMismatch("tuple shapes differ: (D=" + std::to_string(a.modulus()) + ", n=" + std::to_string(a.size()) +
                            ") vs (D=" + std::to_string(b.modulus()) + ", n=" + std::to_string(b.size()) + ")");
  }
}

inline std::uint64_t checked_label_count(int modulus, int n, std::uint64_t cap) {
  const auto total = ipow_saturating(static_cast<std::uint64_t>(modulus), n);
  if (total > cap) {
    throw CapacityError("D^n = " + std::to_string(modulus) + "^" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  return total;
}

}  // namespace detail

inline ModTuple add(const ModTuple& a, const ModTuple& b) {
  detail::check_compatible(a, b);
  std::vector<Residue> v(a.size());
  const auto d = static_cast<Residue>(a.modulus());
  for (int l = 0; l < a.size(); ++l) v[l] = (a[l] + b[l]) % d;
  return ModTuple(a.modulus(), std::move(v));
}

inline ModTuple negate(const ModTuple& a) {
  std::vector<Residue> v(a.size());
  const auto d = static_cast<Residue>(a.modulus());
  for (int l = 0; l < a.size(); ++l) v[l] = (d - a[l]) % d;
  return ModTuple(a.modulus(), std::move(v));
}

inline ModTuple subtract(const ModTuple& a, const ModTuple& b) {
  detail::check_compatible(a, b);
  return add(a, negate(b));
}

inline ModTuple scale(Residue j, const ModTuple& a) {
  if (j >= static_cast<Residue>(a.modulus())) {
    throw InvalidArgument("scalar " + std::to_string(j) + " out of range for modulus " + std::to_string(a.modulus()));
  }
  std::vector<Residue> v(a.size());
  const auto d = static_cast<std::uint64_t>(a.modulus());
  for (int l = 0; l < a.size(); ++l) v[l] = static_cast<Residue>((static_cast<std::uint64_t>(j) * a[l]) % d);
  return ModTuple(a.modulus(), std::move(v));
}

inline Residue dot(const ModTuple& a, const ModTuple& b) {
  detail::check_compatible(a, b);
  std::uint64_t s = 0;
  const auto d = static_cast<std::uint64_t>(a.modulus());
  for (int l = 0; l < a.size(); ++l) s = (s + static_cast<std::uint64_t>(a[l]) * b[l]) % d;
  return static_cast<Residue>(s);
}

inline ModTuple operator+(const ModTuple& a, const ModTuple& b) { return add(a, b); }
inline ModTuple operator-(const ModTuple& a, const ModTuple& b) { return subtract(a, b); }
inline ModTuple operator-(const ModTuple& a) { return negate(a); }

/// Index-level arithmetic on the D^n graph-basis labels, used by the hot
/// loops that would otherwise allocate a ModTuple per operation.
class LabelSpace {
 public:
  LabelSpace(int modulus, int n, std::uint64_t cap = mem_cap())
      : d_(modulus), n_(n), size_(detail::checked_label_count(modulus, n, cap)), binary_(modulus == 2) {
    if (modulus < 2) throw InvalidArgument("modulus must be >= 2");
    if (n < 1) throw InvalidArgument("tuple length must be >= 1");
  }

  int modulus() const noexcept { return d_; }
  int n() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    if (binary_) return a ^ b;
    std::uint64_t out = 0, place = 1;
    for (int l = 0; l < n_; ++l) {
      out += ((a % d_ + b % d_) % d_) * place;
      a /= d_;
      b /= d_;
      place *= d_;
    }
    return out;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    if (binary_) return a ^ b;
    std::uint64_t out = 0, place = 1;
    for (int l = 0; l < n_; ++l) {
      out += ((a % d_ + d_ - b % d_) % d_) * place;
      a /= d_;
      b /= d_;
      place *= d_;
    }
    return out;
  }

  ModTuple tuple(std::uint64_t index) const { return ModTuple::from_index(d_, n_, index); }
  std::uint64_t index(const ModTuple& a) const {
    if (static_cast<std::uint64_t>(a.modulus()) != d_ || a.size() != n_) throw DimensionMismatch("label does not belong to this label space");
    return a.index();
  }

 private:
  std::uint64_t d_;
  int n_;
  std::uint64_t size_;
  bool binary_;
};

/// Rows generating an additive subgroup of Z_D^n. Zero rows are allowed.
class GeneratorMatrix {
 public:
  GeneratorMatrix(int modulus, int n) : modulus_(modulus), n_(n) {
    if (modulus < 2) throw InvalidArgument("modulus must be >= 2");
    if (n < 1) throw InvalidArgument("tuple length must be >= 1");
  }

  GeneratorMatrix(int modulus, int n, std::vector<ModTuple> rows) : GeneratorMatrix(modulus, n) {
    for (auto& r : rows) push_back(std::move(r));
  }

  void push_back(ModTuple row) {
    if (row.modulus() != modulus_ || row.size() != n_) {
      throw DimensionMismatch("generator row does not match (D=" + std::to_string(modulus_) + ", n=" + std::to_string(n_) + ")");
    }
    rows_.push_back(std::move(row));
  }

  int modulus() const noexcept { return modulus_; }
  int n() const noexcept { return n_; }
  const std::vector<ModTuple>& rows() const noexcept { return rows_; }
  std::size_t row_count() const noexcept { return rows_.size(); }

 private:
  int modulus_;
  int n_;
  std::vector<ModTuple> rows_;
};

/// Full additive subgroup generated by the rows, zero included, ascending.
inline std::vector<ModTuple> span(const GeneratorMatrix& gens, std::uint64_t cap = mem_cap()) {
  const int d = gens.modulus();
  const int n = gens.n();
  // Label indices must fit in 64 bits; the cap bounds the set itself.
  detail::checked_label_count(d, n, UINT64_MAX - 1);

  std::vector<ModTuple> elems{ModTuple::zero(d, n)};
  std::unordered_set<std::uint64_t> seen{0};
  for (const auto& g : gens.rows()) {
    if (seen.contains(g.index())) continue;
    // H + <g> = union of cosets H + j*g for j until j*g falls back into H.
    const std::size_t base_size = elems.size();
    ModTuple step = g;
    while (!seen.contains(step.index())) {
      for (std::size_t i = 0; i < base_size; ++i) {
        ModTuple x = add(elems[i], step);
        if (seen.insert(x.index()).second) {
          elems.push_back(std::move(x));
          if (elems.size() > cap) throw CapacityError("span exceeds cap " + std::to_string(cap));
        }
      }
      step = add(step, g);
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

/// Elementary column operation on a generator matrix.
struct ColumnOp {
  enum class Kind { kSwap, kAddMultiple, kScale };
  Kind kind;
  int a;            // source column (kAddMultiple), scaled column (kScale)
  int b;            // target column (kAddMultiple), partner column (kSwap)
  Residue factor;   // multiple for kAddMultiple, unit for kScale
};

/// Diagonal generator matrix reached by row and column operations, plus the
/// column operations needed to carry dual solutions back to the input.
struct DiagonalForm {
  int modulus = 2;
  std::vector<Residue> diagonal;   // f_1..f_n, possibly 0
  std::vector<ColumnOp> column_ops;  // in application order

  int n() const noexcept { return static_cast<int>(diagonal.size()); }

  /// ∏ D / gcd(f_l, D): the order of the row span.
  std::uint64_t span_order() const {
    std::uint64_t order = 1;
    for (auto f : diagonal) order *= static_cast<std::uint64_t>(modulus) / std::gcd(static_cast<std::uint64_t>(f), static_cast<std::uint64_t>(modulus));
    return order;
  }

  /// ∏ gcd(f_l, D): the order of the dual subgroup.
  std::uint64_t dual_order() const {
    std::uint64_t order = 1;
    for (auto f : diagonal) order *= std::gcd(static_cast<std::uint64_t>(f), static_cast<std::uint64_t>(modulus));
    return order;
  }

  /// Maps a solution s' of the diagonal system to s = E s' where F·E is the
  /// diagonal matrix, so that F s = 0 whenever diag(f) s' = 0.
  ModTuple map_dual_back(const ModTuple& solution) const {
    if (solution.modulus() != modulus || solution.size() != n()) throw DimensionMismatch("dual solution shape mismatch");
    std::vector<std::uint64_t> v(solution.entries().begin(), solution.entries().end());
    const auto d = static_cast<std::uint64_t>(modulus);
    for (auto it = column_ops.rbegin(); it != column_ops.rend(); ++it) {
      switch (it->kind) {
        case ColumnOp::Kind::kSwap:
          std::swap(v[it->a], v[it->b]);
          break;
        case ColumnOp::Kind::kAddMultiple:
          // col_b += m col_a  <=>  E = I + m e_a e_b^T.
          v[it->a] = (v[it->a] + it->factor * v[it->b]) % d;
          break;
        case ColumnOp::Kind::kScale:
          v[it->a] = (v[it->a] * it->factor) % d;
          break;
      }
    }
    std::vector<Residue> out(v.begin(), v.end());
    return ModTuple(modulus, std::move(out));
  }
};

namespace detail {

class WorkMatrix {
 public:
  WorkMatrix(const GeneratorMatrix& g) : d_(g.modulus()), rows_(g.row_count()), cols_(g.n()), m_(rows_ * cols_) {
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) at(r, c) = g.rows()[r][static_cast<int>(c)];
    }
  }

  std::uint64_t& at(std::size_t r, std::size_t c) { return m_[r * cols_ + c]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b, std::vector<ColumnOp>& log) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
    log.push_back({ColumnOp::Kind::kSwap, static_cast<int>(a), static_cast<int>(b), 0});
  }
  // row_dst -= q * row_src
  void sub_row(std::size_t dst, std::size_t src, std::uint64_t q) {
    q %= d_;
    if (q == 0) return;
    const auto neg = d_ - q;
    for (std::size_t c = 0; c < cols_; ++c) at(dst, c) = (at(dst, c) + neg * at(src, c)) % d_;
  }
  // col_dst -= q * col_src, logged as col_dst += (D - q) col_src
  void sub_col(std::size_t dst, std::size_t src, std::uint64_t q, std::vector<ColumnOp>& log) {
    q %= d_;
    if (q == 0) return;
    const auto neg = d_ - q;
    for (std::size_t r = 0; r < rows_; ++r) at(r, dst) = (at(r, dst) + neg * at(r, src)) % d_;
    log.push_back({ColumnOp::Kind::kAddMultiple, static_cast<int>(src), static_cast<int>(dst), static_cast<Residue>(neg)});
  }

 private:
  std::uint64_t d_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> m_;
};

}  // namespace detail

/// Brings F to diagonal form with row permutations, row additions, column
/// permutations and column additions. Each pivot step moves the smallest
/// positive entry to the corner and reduces by remainders until it divides
/// its row and column, so the corner strictly decreases and the loop ends.
inline DiagonalForm diagonalize(const GeneratorMatrix& F) {
  DiagonalForm out;
  out.modulus = F.modulus();
  const std::size_t n = static_cast<std::size_t>(F.n());
  out.diagonal.assign(n, 0);
  if (F.row_count() == 0) return out;

  detail::WorkMatrix m(F);
  const std::size_t rows = m.rows();
  for (std::size_t t = 0; t < std::min(rows, n); ++t) {
    // Smallest positive entry of the trailing submatrix.
    std::uint64_t best = 0;
    std::size_t br = 0, bc = 0;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < n; ++c) {
        const auto v = m.at(r, c);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          br = r;
          bc = c;
        }
      }
    }
    if (best == 0) break;
    m.swap_rows(t, br);
    m.swap_cols(t, bc, out.column_ops);

    bool reduced = false;
    while (!reduced) {
      reduced = true;
      const auto f = m.at(t, t);
      for (std::size_t c = t + 1; c < n && reduced; ++c) {
        const auto v = m.at(t, c);
        if (v % f != 0) {
          m.sub_col(c, t, v / f, out.column_ops);
          m.swap_cols(t, c, out.column_ops);
          reduced = false;
        }
      }
      for (std::size_t r = t + 1; r < rows && reduced; ++r) {
        const auto v = m.at(r, t);
        if (v % f != 0) {
          m.sub_row(r, t, v / f);
          m.swap_rows(t, r);
          reduced = false;
        }
      }
    }

    const auto f = m.at(t, t);
    for (std::size_t c = t + 1; c < n; ++c) m.sub_col(c, t, m.at(t, c) / f, out.column_ops);
    for (std::size_t r = t + 1; r < rows; ++r) m.sub_row(r, t, m.at(r, t) / f);
    out.diagonal[t] = static_cast<Residue>(f);
  }
  return out;
}

/// Generators of the dual subgroup {s : c·s = 0 for every c in span(F)}.
inline GeneratorMatrix dual_generators(const GeneratorMatrix& F) {
  const auto diag = diagonalize(F);
  const int d = F.modulus();
  const int n = F.n();
  GeneratorMatrix out(d, n);
  for (int l = 0; l < n; ++l) {
    // Solutions of f s = 0 (mod D) are the multiples of D / gcd(f, D).
    const auto g = std::gcd(static_cast<int>(diag.diagonal[l]), d);
    const auto step = static_cast<Residue>((d / g) % d);
    if (step == 0) continue;  // only s_l = 0
    out.push_back(diag.map_dual_back(ModTuple::unit(d, n, l, step)));
  }
  return out;
}

/// The maximal dual set S of span(C), ascending. |span(C)|·|S| = D^n.
inline std::vector<ModTuple> solve_dual(const GeneratorMatrix& C, std::uint64_t cap = mem_cap()) {
  const auto diag = diagonalize(C);
  if (diag.dual_order() > cap) throw CapacityError("dual subgroup of order " + std::to_string(diag.dual_order()) + " exceeds cap");
  return span(dual_generators(C), cap);
}

inline GeneratorMatrix as_generators(int modulus, int n, const std::vector<ModTuple>& elems) {
  return GeneratorMatrix(modulus, n, elems);
}

}  // namespace qgc
