#pragma once

// Generalized Pauli products w^λ ∏ X_l^μ_l Z_l^ν_l with exact phases in
// powers of w = exp(2πi/D). Per qudit the canonical order is X before Z;
// moving Z^ν to the right of X^μ costs w^{-νμ} because XZ = w ZX.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgc/zmod.hpp"

namespace qgc {

class PauliProduct {
 public:
  PauliProduct(Residue phase, ModTuple xexp, ModTuple zexp) : phase_(phase), x_(std::move(xexp)), z_(std::move(zexp)) {
    detail::check_compatible(x_, z_);
    if (phase_ >= static_cast<Residue>(x_.modulus())) throw InvalidArgument("phase exponent out of range");
  }

  static PauliProduct identity(int modulus, int n) {
    return PauliProduct(0, ModTuple::zero(modulus, n), ModTuple::zero(modulus, n));
  }

  /// X_l^power, `l` 0-based.
  static PauliProduct x(int modulus, int n, int l, Residue power = 1) {
    return PauliProduct(0, ModTuple::unit(modulus, n, l, power), ModTuple::zero(modulus, n));
  }

  /// Z_l^power, `l` 0-based.
  static PauliProduct z(int modulus, int n, int l, Residue power = 1) {
    return PauliProduct(0, ModTuple::zero(modulus, n), ModTuple::unit(modulus, n, l, power));
  }

  int modulus() const noexcept { return x_.modulus(); }
  int n() const noexcept { return x_.size(); }
  Residue phase() const noexcept { return phase_; }
  const ModTuple& xexp() const noexcept { return x_; }
  const ModTuple& zexp() const noexcept { return z_; }

  PauliProduct with_phase(Residue phase) const { return PauliProduct(phase % modulus(), x_, z_); }

  bool is_identity() const noexcept { return phase_ == 0 && x_.is_zero() && z_.is_zero(); }

  friend bool operator==(const PauliProduct&, const PauliProduct&) = default;

 private:
  Residue phase_;
  ModTuple x_;
  ModTuple z_;
};

inline void check_compatible(const PauliProduct& p, const PauliProduct& q) { detail::check_compatible(p.xexp(), q.xexp()); }

/// Canonical form of P·Q: λ = λ_P + λ_Q − ν_P·μ_Q (mod D).
inline PauliProduct multiply(const PauliProduct& p, const PauliProduct& q) {
  check_compatible(p, q);
  const auto d = static_cast<Residue>(p.modulus());
  const Residue cross = dot(p.zexp(), q.xexp());
  const Residue phase = (p.phase() + q.phase() + (d - cross)) % d;
  return PauliProduct(phase, add(p.xexp(), q.xexp()), add(p.zexp(), q.zexp()));
}

inline PauliProduct operator*(const PauliProduct& p, const PauliProduct& q) { return multiply(p, q); }

inline PauliProduct inverse(const PauliProduct& p) {
  const auto d = static_cast<Residue>(p.modulus());
  const Residue phase = (2 * d - p.phase() - dot(p.zexp(), p.xexp())) % d;
  return PauliProduct(phase, negate(p.xexp()), negate(p.zexp()));
}

inline PauliProduct power(const PauliProduct& p, unsigned k) {
  PauliProduct r = PauliProduct::identity(p.modulus(), p.n());
  for (unsigned i = 0; i < k; ++i) r = multiply(r, p);
  return r;
}

/// The exponent c with P·Q = w^c Q·P, namely μ_P·ν_Q − ν_P·μ_Q (mod D).
inline Residue commutation_exponent(const PauliProduct& p, const PauliProduct& q) {
  check_compatible(p, q);
  const auto d = static_cast<Residue>(p.modulus());
  return (dot(p.xexp(), q.zexp()) + d - dot(p.zexp(), q.xexp())) % d;
}

/// Qudits (0-based, ascending) on which P acts nontrivially.
inline std::vector<int> base(const PauliProduct& p) {
  std::vector<int> out;
  for (int l = 0; l < p.n(); ++l) {
    if (p.xexp()[l] != 0 || p.zexp()[l] != 0) out.push_back(l);
  }
  return out;
}

inline int size(const PauliProduct& p) { return static_cast<int>(base(p).size()); }

/// Renders `w^λ X1^μ Z1^ν ...`: phase omitted when 0, exponents omitted when
/// 1, qudits numbered from 1, identity rendered as `I`.
inline std::string to_string(const PauliProduct& p) {
  std::string out;
  auto append = [&out](const std::string& tok) {
    if (!out.empty()) out.push_back(' ');
    out += tok;
  };
  auto factor = [](char op, int l, Residue e) {
    std::string s(1, op);
    s += std::to_string(l + 1);
    if (e != 1) s += "^" + std::to_string(e);
    return s;
  };
  if (p.phase() != 0) append("w^" + std::to_string(p.phase()));
  for (int l = 0; l < p.n(); ++l) {
    if (p.xexp()[l] != 0) append(factor('X', l, p.xexp()[l]));
    if (p.zexp()[l] != 0) append(factor('Z', l, p.zexp()[l]));
  }
  return out.empty() ? "I" : out;
}

/// Restartable stream of every phase-free Pauli product of a given size.
/// Order: bases in ascending lexicographic order; within a base the
/// per-qudit (μ, ν) pairs advance like an odometer, last qudit fastest,
/// each pair running over the D²−1 nonzero pairs in ascending order.
class PauliEnumerator {
 public:
  PauliEnumerator(int n, int modulus, int s) : n_(n), d_(modulus), s_(s) {
    if (modulus < 2) throw InvalidArgument("modulus must be >= 2");
    if (s < 1 || s > n) throw InvalidArgument("size must satisfy 1 <= s <= n");
    reset();
  }

  void reset() {
    base_.resize(s_);
    for (int i = 0; i < s_; ++i) base_[i] = i;
    pair_.assign(s_, 1);
    done_ = false;
  }

  /// Writes the next product into `out`; false once exhausted.
  bool next(std::optional<PauliProduct>& out) {
    if (done_) return false;
    std::vector<Residue> xs(n_, 0), zs(n_, 0);
    for (int i = 0; i < s_; ++i) {
      xs[base_[i]] = static_cast<Residue>(pair_[i] / d_);
      zs[base_[i]] = static_cast<Residue>(pair_[i] % d_);
    }
    out.emplace(0, ModTuple(d_, std::move(xs)), ModTuple(d_, std::move(zs)));
    advance();
    return true;
  }

  /// Base (0-based qudits) and pair codes μ·D+ν of the current position;
  /// used by callers that only need exponents.
  const std::vector<int>& current_base() const noexcept { return base_; }
  const std::vector<int>& current_pairs() const noexcept { return pair_; }
  bool done() const noexcept { return done_; }
  void advance() {
    const int top = d_ * d_ - 1;
    for (int i = s_ - 1; i >= 0; --i) {
      if (pair_[i] < top) {
        ++pair_[i];
        return;
      }
      pair_[i] = 1;
    }
    // All pairs exhausted for this base: next combination.
    int i = s_ - 1;
    while (i >= 0 && base_[i] == n_ - s_ + i) --i;
    if (i < 0) {
      done_ = true;
      return;
    }
    ++base_[i];
    for (int j = i + 1; j < s_; ++j) base_[j] = base_[j - 1] + 1;
  }

 private:
  int n_;
  int d_;
  int s_;
  std::vector<int> base_;
  std::vector<int> pair_;
  bool done_ = false;
};

/// C(n, s) (D²−1)^s: the number of products PauliEnumerator yields.
inline std::uint64_t count_by_size(int n, int modulus, int s) {
  std::uint64_t c = 1;
  for (int i = 0; i < s; ++i) c = c * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  const auto per = static_cast<std::uint64_t>(modulus) * modulus - 1;
  for (int i = 0; i < s; ++i) c *= per;
  return c;
}

/// Collects the whole stream; convenient for tests and small n.
inline std::vector<PauliProduct> enumerate_by_size(int n, int modulus, int s) {
  std::vector<PauliProduct> out;
  PauliEnumerator e(n, modulus, s);
  std::optional<PauliProduct> p;
  while (e.next(p)) out.push_back(*p);
  return out;
}

}  // namespace qgc
