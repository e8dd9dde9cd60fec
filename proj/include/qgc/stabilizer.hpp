#pragma once

// Stabilizer of an additive graph code. The dual S = {s : s·c ≡ 0 for all
// codewords c} labels the stabilizer; each s is realised as the Pauli product
// T_s = ω^q(s) X^s Z^(−Γs) with q(s) = Σ_{l<m} Γ_lm s_l s_m, which acts on the
// graph basis as T_s|a⟩ = ω^(s·a)|a⟩.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qgc/code.hpp"
#include "qgc/config.hpp"
#include "qgc/graph.hpp"
#include "qgc/pauli.hpp"
#include "qgc/zmod.hpp"

namespace qgc {

inline PauliProduct stabilizer_element(const Graph& g, const ModTuple& s) {
  check_compatible(g, s);
  return PauliProduct(edge_form(g, s), s, negate(gamma_times(g, s)));
}

struct StabilizerGroup {
  Graph graph;
  GeneratorMatrix generators;          // generators of S
  std::uint64_t order = 0;             // |S|
  bool enumerated = false;             // tuples/elements hold all of S
  std::vector<ModTuple> tuples;        // S ascending, when enumerated
  std::vector<PauliProduct> elements;  // T_s per tuple, same order
};

/// Throws NotStabilizerCode for nonadditive codes.
inline StabilizerGroup stabilizer_subgroup(const GraphCode& code, std::uint64_t cap = mem_cap()) {
  if (!code.additive() || !code.generators()) throw NotStabilizerCode("code is not additive, so it has no stabilizer");
  auto gens = dual_generators(*code.generators());
  StabilizerGroup stab{code.graph(), gens, diagonalize(gens).span_order(), false, {}, {}};
  if (stab.order <= cap) {
    stab.enumerated = true;
    stab.tuples = span(gens, cap);
    stab.elements.reserve(stab.tuples.size());
    for (const auto& s : stab.tuples) stab.elements.push_back(stabilizer_element(code.graph(), s));
  }
  return stab;
}

struct StabilizerCheck {
  std::string name;
  bool pass = false;
  bool exhaustive = true;  // false when only generators or a sample were checked
  std::string detail;
  std::optional<ModTuple> s;
  std::optional<ModTuple> codeword;
};

struct StabilizerReport {
  bool pass = false;
  std::vector<StabilizerCheck> checks;

  const StabilizerCheck* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

inline StabilizerCheck named_check(std::string name) {
  StabilizerCheck c;
  c.name = std::move(name);
  return c;
}

/// C2 is enumerated only up to this many labels.
inline constexpr std::uint64_t kMaximalityCap = 4096;

namespace detail {

inline StabilizerCheck check_order(const GraphCode& code, const StabilizerGroup& stab) {
  auto c = named_check("order");
  const auto total = ipow_saturating(static_cast<std::uint64_t>(code.modulus()), code.n());
  c.pass = static_cast<std::uint64_t>(code.K()) * stab.order == total;
  c.detail = std::to_string(code.K()) + " * " + std::to_string(stab.order) + (c.pass ? " == " : " != ") + std::to_string(total);
  return c;
}

// C1: every element fixes every codeword with phase 0.
inline StabilizerCheck check_fixes_codewords(const GraphCode& code, const StabilizerGroup& stab) {
  auto c = named_check("fixes_codewords");
  const auto& g = code.graph();
  std::vector<std::pair<ModTuple, PauliProduct>> items;
  if (stab.enumerated) {
    for (std::size_t i = 0; i < stab.tuples.size(); ++i) items.emplace_back(stab.tuples[i], stab.elements[i]);
  } else {
    c.exhaustive = false;
    for (const auto& s : stab.generators.rows()) items.emplace_back(s, stabilizer_element(g, s));
  }
  for (const auto& [s, t] : items) {
    for (const auto& w : code.codewords()) {
      const auto [label, phase] = apply_pauli_symbolic(g, t, w);
      if (label != w || phase != 0) {
        c.s = s;
        c.codeword = w;
        c.detail = "T_" + s.to_digits() + " = " + to_string(t) + " sends |" + w.to_digits() + "> to w^" + std::to_string(phase) + " |" +
                   label.to_digits() + ">";
        return c;
      }
    }
  }
  c.pass = true;
  c.detail = std::to_string(items.size()) + " elements x " + std::to_string(code.K()) + " codewords";
  return c;
}

inline StabilizerCheck check_commuting(const StabilizerGroup& stab) {
  auto c = named_check("commuting");
  const auto& rows = stab.generators.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (commutation_exponent(stabilizer_element(stab.graph, rows[i]), stabilizer_element(stab.graph, rows[j])) != 0) {
        c.s = rows[i];
        c.detail = "generators " + rows[i].to_digits() + " and " + rows[j].to_digits() + " do not commute";
        return c;
      }
    }
  }
  c.pass = true;
  c.detail = "generators commute pairwise";
  return c;
}

// T_s T_t = T_(s+t) for every generator s and every stored t.
inline StabilizerCheck check_group_law(const StabilizerGroup& stab) {
  auto c = named_check("group_law");
  std::vector<ModTuple> ts = stab.enumerated ? stab.tuples : stab.generators.rows();
  c.exhaustive = stab.enumerated;
  for (const auto& s : stab.generators.rows()) {
    const auto ts_elem = stabilizer_element(stab.graph, s);
    for (const auto& t : ts) {
      const auto lhs = multiply(ts_elem, stabilizer_element(stab.graph, t));
      const auto rhs = stabilizer_element(stab.graph, add(s, t));
      if (lhs != rhs) {
        c.s = s;
        c.detail = "T_" + s.to_digits() + " T_" + t.to_digits() + " = " + to_string(lhs) + " but T_sum = " + to_string(rhs);
        return c;
      }
    }
  }
  c.pass = true;
  return c;
}

// C3: the labels fixed by every generator are exactly the codewords.
inline StabilizerCheck check_fixed_space(const GraphCode& code, const StabilizerGroup& stab, std::uint64_t cap) {
  auto c = named_check("fixed_space");
  const auto& g = code.graph();
  const LabelSpace space(g.modulus(), g.n(), cap);
  std::vector<PauliProduct> gens;
  for (const auto& s : stab.generators.rows()) gens.push_back(stabilizer_element(g, s));
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const auto a = space.tuple(i);
    const bool fixed = std::all_of(gens.begin(), gens.end(), [&](const PauliProduct& t) {
      const auto [label, phase] = apply_pauli_symbolic(g, t, a);
      return label == a && phase == 0;
    });
    if (!fixed) continue;
    ++count;
    if (!std::binary_search(code.codewords().begin(), code.codewords().end(), a)) {
      c.codeword = a;
      c.detail = "label " + a.to_digits() + " is fixed by S but is not a codeword";
      return c;
    }
  }
  c.pass = count == code.K();
  c.detail = std::to_string(count) + " fixed labels, K = " + std::to_string(code.K());
  return c;
}

// C2: any product fixing every codeword is some T_s. Only products with zero
// label shift, ω^λ X^μ Z^(−Γμ), can fix a codeword.
inline StabilizerCheck check_maximal(const GraphCode& code, const StabilizerGroup& stab) {
  auto c = named_check("maximal");
  const auto& g = code.graph();
  const LabelSpace space(g.modulus(), g.n());
  for (std::uint64_t i = 1; i < space.size(); ++i) {
    const auto mu = space.tuple(i);
    const PauliProduct p(0, mu, negate(gamma_times(g, mu)));
    std::optional<Residue> common;
    bool constant = true;
    for (const auto& w : code.codewords()) {
      const auto phase = apply_pauli_symbolic(g, p, w).second;
      if (common && *common != phase) {
        constant = false;
        break;
      }
      common = phase;
    }
    if (!constant) continue;
    // ω^(−phase) p fixes every codeword; it must equal T_μ with μ ∈ S.
    const auto fixer = p.with_phase((g.modulus() - *common) % g.modulus());
    const bool in_s = std::binary_search(stab.tuples.begin(), stab.tuples.end(), mu);
    if (!in_s || fixer != stabilizer_element(g, mu)) {
      c.s = mu;
      c.detail = to_string(fixer) + " fixes every codeword but is not a stabilizer element";
      return c;
    }
  }
  c.pass = true;
  return c;
}

inline StabilizerCheck check_double_dual(const GraphCode& code, const StabilizerGroup& stab, std::uint64_t cap) {
  auto c = named_check("double_dual");
  const auto back = solve_dual(stab.generators, cap);
  c.pass = back == code.codewords();
  c.detail = c.pass ? "dual of S equals the code" : "dual of S has " + std::to_string(back.size()) + " elements, K = " + std::to_string(code.K());
  return c;
}

}  // namespace detail

/// Runs the order identity, C1, commutation, the group law, the double
/// dual, C3 (labels within the memory cap) and C2 (D^n <= kMaximalityCap).
inline StabilizerReport verify_stabilizer(const GraphCode& code, const StabilizerGroup& stab, std::uint64_t cap = mem_cap()) {
  if (stab.graph != code.graph()) throw InvalidArgument("stabilizer belongs to a different graph");
  StabilizerReport r;
  r.checks.push_back(detail::check_order(code, stab));
  r.checks.push_back(detail::check_fixes_codewords(code, stab));
  r.checks.push_back(detail::check_commuting(stab));
  r.checks.push_back(detail::check_group_law(stab));
  const auto labels = ipow_saturating(static_cast<std::uint64_t>(code.modulus()), code.n());
  if (labels <= cap) {
    r.checks.push_back(detail::check_double_dual(code, stab, cap));
    r.checks.push_back(detail::check_fixed_space(code, stab, cap));
  }
  if (labels <= kMaximalityCap && stab.enumerated) r.checks.push_back(detail::check_maximal(code, stab));
  r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const StabilizerCheck& c) { return c.pass; });
  return r;
}

}  // namespace qgc
