#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace qgc;
using ref::t;

TEST(Graph, ValidatesAdjacency) {
  EXPECT_THROW(Graph(2, 2, {0, 1, 0, 0}), InvalidArgument);
  EXPECT_THROW(Graph(2, 2, {1, 0, 0, 0}), InvalidArgument);
  EXPECT_THROW(Graph(2, 2, {0, 2, 2, 0}), InvalidArgument);
  EXPECT_NO_THROW(Graph(2, 3, {0, 2, 2, 0}));
}

TEST(Family, Star) {
  const auto g = build_family(Family::kStar, 3, 2);
  EXPECT_EQ(g.adjacency(), (std::vector<Residue>{0, 1, 1, 1, 0, 0, 1, 0, 0}));
}

TEST(Family, CycleAndDoubleEdge) {
  const auto g = build_family(Family::kCycle, 5, 2);
  for (int l = 0; l < 5; ++l) {
    EXPECT_EQ(g.neighbors(l).size(), 2u);
    EXPECT_EQ(g.weight(l, (l + 1) % 5), 1u);
  }
  const auto h = build_family(Family::kCycle, 4, 3, {true});
  EXPECT_EQ(h.weight(0, 1), 2u);
  EXPECT_EQ(h.weight(1, 2), 1u);
  EXPECT_THROW(build_family(Family::kCycle, 4, 2, {true}), InvalidArgument);
  EXPECT_THROW(build_family(Family::kStar, 4, 3, {true}), InvalidArgument);
}

TEST(Family, HypercubeDegree) {
  const auto g = build_family(Family::kHypercube, 16, 2);
  for (int l = 0; l < 16; ++l) EXPECT_EQ(g.neighbors(l).size(), 4u);
  EXPECT_THROW(build_family(Family::kHypercube, 12, 2), InvalidArgument);
}

TEST(Family, BarAndWheel) {
  const auto bar = build_family(Family::kBar, 5, 2);
  EXPECT_EQ(bar.weight(0, 2), 1u);
  EXPECT_EQ(bar.weight(1, 3), 1u);
  EXPECT_EQ(bar.weight(1, 4), 1u);
  EXPECT_EQ(bar.neighbors(4).size(), 1u);
  const auto wheel = build_family(Family::kWheel, 6, 2);
  EXPECT_EQ(wheel.neighbors(0).size(), 5u);
  for (int l = 1; l < 6; ++l) EXPECT_EQ(wheel.neighbors(l).size(), 3u);
  EXPECT_THROW(build_family(Family::kWheel, 3, 2), InvalidArgument);
  EXPECT_THROW(build_family(Family::kStar, 2, 2), InvalidArgument);
}

TEST(Family, NamesRoundTrip) {
  for (auto f : {Family::kBar, Family::kStar, Family::kCycle, Family::kWheel, Family::kHypercube}) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_THROW(parse_family("torus"), InvalidArgument);
}

TEST(CoordinationBound, Examples) {
  EXPECT_EQ(coordination_bound(build_family(Family::kStar, 4, 2)), 2);
  for (int n = 3; n < 9; ++n) EXPECT_EQ(coordination_bound(build_family(Family::kCycle, n, 2)), 3);
  EXPECT_EQ(coordination_bound(build_family(Family::kHypercube, 16, 2)), 5);
  EXPECT_EQ(coordination_bound(build_family(Family::kCycle, 4, 3, {true})), 3);
}

TEST(Displacement, Examples) {
  EXPECT_EQ(displacement(build_family(Family::kStar, 3, 2), PauliProduct::x(2, 3, 0)), t(2, "011"));
  const auto cyc = build_family(Family::kCycle, 5, 3);
  EXPECT_EQ(displacement(cyc, PauliProduct::z(3, 5, 1)), t(3, "01000"));
  Graph two(2, 2);
  two.set_edge(0, 1, 1);
  EXPECT_EQ(displacement(two, PauliProduct::x(2, 2, 0) * PauliProduct::z(2, 2, 0)), t(2, "11"));
}

TEST(Displacement, IsLinear) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 4), n = 1 + static_cast<int>(rng() % 5);
    const auto g = ref::random_graph(rng, n, d);
    const auto p = ref::random_pauli(rng, d, n), q = ref::random_pauli(rng, d, n);
    EXPECT_EQ(displacement(g, p * q), add(displacement(g, p), displacement(g, q)));
  }
}

TEST(ApplySymbolic, Examples) {
  Graph two(2, 2);
  two.set_edge(0, 1, 1);
  const auto xx = PauliProduct::x(2, 2, 0) * PauliProduct::x(2, 2, 1);
  EXPECT_EQ(apply_pauli_symbolic(two, xx, t(2, "00")), std::make_pair(t(2, "11"), Residue{1}));
  EXPECT_EQ(apply_pauli_symbolic(two, PauliProduct::x(2, 2, 0), t(2, "10")), std::make_pair(t(2, "11"), Residue{1}));
  const auto cyc = build_family(Family::kCycle, 4, 3);
  EXPECT_EQ(apply_pauli_symbolic(cyc, PauliProduct::z(3, 4, 0), t(3, "0000")), std::make_pair(t(3, "1000"), Residue{0}));
}

TEST(ApplySymbolic, Composes) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 4), n = 1 + static_cast<int>(rng() % 5);
    const auto g = ref::random_graph(rng, n, d);
    const auto p = ref::random_pauli(rng, d, n), q = ref::random_pauli(rng, d, n);
    const auto a = ref::random_tuple(rng, d, n);
    const auto [b, phase1] = apply_pauli_symbolic(g, p, a);
    const auto [c, phase2] = apply_pauli_symbolic(g, q, b);
    const auto [c2, phase] = apply_pauli_symbolic(g, q * p, a);
    EXPECT_EQ(c, c2);
    EXPECT_EQ((phase1 + phase2) % d, phase);
  }
}

// Independent dense check: P|a⟩ = ω^p |b⟩ with reference states and matrices.
TEST(ApplySymbolic, AgreesWithDenseReference) {
  std::mt19937 rng(10);
  for (int gi = 0; gi < 50; ++gi) {
    const int d = 2 + gi % 3, n = 1 + static_cast<int>(rng() % 4);
    const auto g = ref::random_graph(rng, n, d);
    for (int k = 0; k < 100; ++k) {
      const auto p = ref::random_pauli(rng, d, n);
      const auto a = ref::random_tuple(rng, d, n);
      const auto [b, phase] = apply_pauli_symbolic(g, p, a);
      const auto lhs = ref::apply(p, ref::state(g, ref::as_ints(a)));
      const auto rhs = ref::state(g, ref::as_ints(b));
      const auto w = ref::omega(d, phase);
      for (std::size_t i = 0; i < lhs.size(); ++i) ASSERT_LT(std::abs(lhs[i] - w * rhs[i]), 1e-9);
    }
  }
}

TEST(ApplySymbolic, MismatchThrows) {
  const auto g = build_family(Family::kCycle, 4, 3);
  EXPECT_THROW(apply_pauli_symbolic(g, PauliProduct::x(3, 5, 0), t(3, "0000")), DimensionMismatch);
  EXPECT_THROW(displacement(g, PauliProduct::x(2, 4, 0)), DimensionMismatch);
}

TEST(GraphFile, RoundTrip) {
  const auto star = build_family(Family::kStar, 3, 2);
  EXPECT_EQ(serialize_graph(star), "2 3\n0 1 1\n1 0 0\n1 0 0\n");
  const std::string text = "3 4\n0 2 0 1\n2 0 1 0\n0 1 0 1\n1 0 1 0\n";
  EXPECT_EQ(serialize_graph(parse_graph(text)), text);
  EXPECT_EQ(parse_graph("# comment\n\n2 2\n# row one\n0 1\n1 0\n"), parse_graph("2 2\n0 1\n1 0\n"));
}

TEST(GraphFile, DistinctErrors) {
  auto kind = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.kind(), e.line());
    }
    return std::make_pair(ParseError::Kind::kHeader, -1);
  };
  EXPECT_EQ(kind("2\n0\n"), std::make_pair(ParseError::Kind::kHeader, 1));
  EXPECT_EQ(kind("2 2\n0 1\n0 0\n"), std::make_pair(ParseError::Kind::kAsymmetric, 3));
  EXPECT_EQ(kind("2 2\n1 1\n1 0\n"), std::make_pair(ParseError::Kind::kDiagonal, 2));
  EXPECT_EQ(kind("2 2\n0 2\n2 0\n"), std::make_pair(ParseError::Kind::kRange, 2));
  EXPECT_EQ(kind("2 2\n0 1 0\n1 0\n"), std::make_pair(ParseError::Kind::kRow, 2));
  EXPECT_EQ(kind("2 2\n0 1\n").first, ParseError::Kind::kRow);
}
