#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace qgc;
using ref::t;

TEST(GraphState, SingleVertexIsUniform) {
  for (int d : {2, 3, 5}) {
    const auto s = build_graph_state(Graph(1, d));
    for (const auto& a : s.amplitudes) EXPECT_NEAR(std::abs(a - Complex(1.0 / std::sqrt(d), 0)), 0.0, 1e-12);
  }
}

TEST(GraphState, TwoPathAmplitudes) {
  Graph g(2, 2);
  g.set_edge(0, 1, 1);
  const auto s = build_graph_state(g);
  const std::vector<Complex> want{0.5, 0.5, 0.5, -0.5};
  for (int i = 0; i < 4; ++i) EXPECT_LT(std::abs(s.amplitudes[i] - want[i]), 1e-12);

  Graph h(2, 3);
  h.set_edge(0, 1, 1);
  const auto q = build_graph_state(h);
  EXPECT_LT(std::abs(q.amplitudes[8] - ref::omega(3, 1) / 3.0), 1e-12);
}

TEST(GraphState, MatchesReferenceAndIsNormalised) {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 3, n = 1 + trial % 4;
    const auto g = ref::random_graph(rng, n, d);
    const auto a = ref::random_tuple(rng, d, n);
    const auto s = graph_basis_state(g, a);
    const auto want = ref::state(g, ref::as_ints(a));
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
    for (std::size_t i = 0; i < want.size(); ++i) ASSERT_LT(std::abs(s.amplitudes[i] - want[i]), 1e-9);
  }
  EXPECT_TRUE(approx_equal(graph_basis_state(build_family(Family::kCycle, 4, 2), t(2, "0000")), build_graph_state(build_family(Family::kCycle, 4, 2))));
}

TEST(GraphState, CapacityError) { EXPECT_THROW(build_graph_state(build_family(Family::kCycle, 12, 2), 1000), CapacityError); }

TEST(GraphBasis, Orthonormal) {
  const auto g = build_family(Family::kWheel, 4, 3);
  const LabelSpace space(3, 4);
  std::vector<DenseState> basis;
  for (std::uint64_t i = 0; i < space.size(); ++i) basis.push_back(graph_basis_state(g, space.tuple(i)));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) EXPECT_NEAR(std::abs(inner(basis[i], basis[j])), i == j ? 1.0 : 0.0, 1e-9);
  }
}

TEST(GraphBasis, CoefficientsMatchInnerProducts) {
  std::mt19937 rng(72);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + trial % 3, n = 1 + trial % 3;
    const auto g = ref::random_graph(rng, n, d);
    const auto gs = build_graph_state(g);
    const auto v = apply_pauli_dense(ref::random_pauli(rng, d, n), graph_basis_state(g, ref::random_tuple(rng, d, n)));
    const auto coeff = graph_basis_coefficients(gs, v);
    for (std::uint64_t i = 0; i < coeff.size(); ++i) {
      const auto want = ref::inner(ref::state(g, ref::digits(d, n, i)), v.amplitudes);
      ASSERT_LT(std::abs(coeff[i] - want), 1e-9);
    }
  }
}

TEST(ApplyDense, XShiftsDown) {
  DenseState s{3, 1, {1.0, 0.0, 0.0}};
  const auto out = apply_pauli_dense(PauliProduct::x(3, 1, 0), s);
  // X|0⟩ = |2⟩
  EXPECT_LT(std::abs(out.amplitudes[2] - Complex(1.0)), 1e-12);
}

TEST(ApplyDense, MatchesReferenceMatrices) {
  std::mt19937 rng(73);
  for (int gi = 0; gi < 50; ++gi) {
    const int d = 2 + gi % 3, n = 1 + gi % 4;
    const auto g = ref::random_graph(rng, n, d);
    const auto psi = graph_basis_state(g, ref::random_tuple(rng, d, n));
    for (int k = 0; k < 20; ++k) {
      const auto p = ref::random_pauli(rng, d, n);
      const auto got = apply_pauli_dense(p, psi);
      const auto want = ref::apply(p, psi.amplitudes);
      for (std::size_t i = 0; i < want.size(); ++i) ASSERT_LT(std::abs(got.amplitudes[i] - want[i]), 1e-9);
    }
  }
}

// X-Z rule: X_l|G⟩ equals Z^(Γ column l)|G⟩.
TEST(ApplyDense, XZRule) {
  std::mt19937 rng(74);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 3, n = 2 + trial % 3;
    const auto g = ref::random_graph(rng, n, d);
    const int l = trial % n;
    const auto lhs = apply_pauli_dense(PauliProduct::x(d, n, l), build_graph_state(g));
    std::vector<Residue> col(n);
    for (int m = 0; m < n; ++m) col[m] = g.weight(l, m);
    const auto rhs = graph_basis_state(g, ModTuple(d, col));
    EXPECT_TRUE(approx_equal(lhs, rhs));
  }
}

TEST(DenseMatrixElement, NonzeroExactlyAtDisplacement) {
  const auto g = build_family(Family::kCycle, 3, 3);
  std::mt19937 rng(75);
  for (int k = 0; k < 60; ++k) {
    const auto q = ref::random_pauli(rng, 3, 3);
    const auto b = ref::random_tuple(rng, 3, 3);
    const auto a = ref::random_tuple(rng, 3, 3);
    const auto v = dense_matrix_element(g, a, q, b);
    const auto [label, phase] = apply_pauli_symbolic(g, q, b);
    if (label == a) EXPECT_LT(std::abs(v - ref::omega(3, phase)), 1e-9);
    else EXPECT_LT(std::abs(v), 1e-9);
  }
}

TEST(KlVerify, RepetitionCodeOnFiveCycle) {
  const auto g = build_family(Family::kCycle, 5, 2);
  const std::vector<ModTuple> rep{t(2, "00000"), t(2, "11111")};
  const auto ok = kl_verify(g, rep, 3);
  EXPECT_TRUE(ok.pass);
  EXPECT_TRUE(ok.nondegenerate);
  EXPECT_EQ(ok.products_checked, 5u * 3 + 10u * 9);
  EXPECT_EQ(ok.nonzero_f, 0u);

  const auto bad = kl_verify(g, rep, 4);
  EXPECT_FALSE(bad.pass);
  ASSERT_TRUE(bad.violation);
  EXPECT_EQ(size(bad.violation->q), 3);
}

TEST(KlVerify, StarFive) { EXPECT_TRUE(kl_verify(star_code_odd(5), 2).pass); }

TEST(KlVerify, AgreesWithAssertDistance) {
  std::mt19937 rng(76);
  int fails = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + trial % 2, n = 3 + trial % 2;
    const auto g = ref::random_graph(rng, n, d);
    std::vector<ModTuple> words{ModTuple::zero(d, n)};
    std::set<std::uint64_t> seen{0};
    for (int k = 0; k < 3; ++k) {
      const auto x = ref::random_tuple(rng, d, n);
      if (seen.insert(x.index()).second) words.push_back(x);
    }
    for (int delta = 2; delta <= 3; ++delta) {
      const bool combinatorial = assert_distance(g, delta, words).pass;
      EXPECT_EQ(kl_verify(g, words, delta).pass, combinatorial);
      fails += !combinatorial;
    }
  }
  EXPECT_GT(fails, 0);
}
