#include "knotproj/rips.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace knotproj;

namespace {

std::vector<KnotCombo> combos(std::initializer_list<const char*> texts) {
  std::vector<KnotCombo> out;
  for (auto t : texts) out.push_back(parse_combo(t));
  return out;
}

/// Every pair inside every maximal simplex is an edge.
void expect_cliques(const RipsComplex& rc) {
  for (const auto& s : rc.maximal_simplices)
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) EXPECT_TRUE(rc.has_edge(s[i], s[j]));
}

}  // namespace

TEST(Rips, TorusThreeSimplex) {
  const RipsComplex rc = torus_rips(combos({"T(2,3)", "T(2,5)", "T(2,7)", "T(2,3) + T(2,5)"}));
  EXPECT_EQ(rc.edges.size(), 6u);
  ASSERT_EQ(rc.maximal_simplices.size(), 1u);
  EXPECT_EQ(rc.maximal_simplices[0].size(), 4u);
  EXPECT_EQ(rc.dimension(), 3);
  EXPECT_TRUE(rc.uncertified.empty());
  for (const auto& e : rc.edges) EXPECT_FALSE(e.certificate.empty());
}

TEST(Rips, SingleVertexAndEmpty) {
  const RipsComplex one = torus_rips(combos({"T(2,9)"}));
  EXPECT_EQ(one.dimension(), 0);
  EXPECT_EQ(one.maximal_simplices, (std::vector<std::vector<std::size_t>>{{0}}));
  EXPECT_EQ(torus_rips({}).dimension(), -1);
}

TEST(Rips, TorusEdgesFollowClassification) {
  std::vector<KnotCombo> cs;
  for (std::int64_t m = 1; m <= 10; ++m) cs.push_back(KnotCombo::torus(m));
  const RipsComplex rc = torus_rips(cs, ExecPolicy{4});
  EXPECT_TRUE(rc.uncertified.empty());
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      EXPECT_EQ(rc.has_edge(i, j), torus_pair_distance_one(static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(j + 1)))
          << i + 1 << " " << j + 1;
  expect_cliques(rc);
}

TEST(Rips, BuildFromArbitraryOracle) {
  // Path graph 0-1-2-3 plus the isolated vertex 4; one pair left undecided.
  const RipsComplex rc = build_rips({"a", "b", "c", "d", "e"}, [](std::size_t i, std::size_t j) {
    if (i == 2 && j == 4) return PairVerdict{Verdict::Uncertified, "?"};
    return PairVerdict{j == i + 1 && j < 4 ? Verdict::One : Verdict::NotOne, "test"};
  });
  EXPECT_EQ(rc.maximal_simplices, (std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}, {2, 3}, {4}}));
  EXPECT_EQ(rc.dimension(), 1);
  EXPECT_EQ(rc.uncertified, (std::vector<std::pair<std::size_t, std::size_t>>{{2, 4}}));
}

TEST(Rips, MaximalCliquesAgainstBruteForce) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 9;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = rng() % 2;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    const RipsComplex rc = build_rips(labels, [&](std::size_t i, std::size_t j) {
      return PairVerdict{adj[i][j] ? Verdict::One : Verdict::NotOne, ""};
    });
    std::vector<std::vector<std::size_t>> brute;
    auto clique = [&](unsigned mask) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if ((mask >> i & 1) && (mask >> j & 1) && !adj[i][j]) return false;
      return true;
    };
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      if (!clique(mask)) continue;
      bool maximal = true;
      for (std::size_t v = 0; v < n && maximal; ++v)
        if (!(mask >> v & 1) && clique(mask | 1u << v)) maximal = false;
      if (!maximal) continue;
      std::vector<std::size_t> s;
      for (std::size_t v = 0; v < n; ++v)
        if (mask >> v & 1) s.push_back(v);
      brute.push_back(s);
    }
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(rc.maximal_simplices, brute);
  }
}

TEST(Rips, DeterministicUnderPermutation) {
  auto cs = combos({"T(2,3)", "T(2,5)", "T(2,7)", "T(2,9)", "T(2,3) + T(2,5)", "T(2,11)"});
  const RipsComplex a = torus_rips(cs);
  auto key = [](const RipsComplex& rc) {
    std::set<std::set<std::string>> out;
    for (const auto& s : rc.maximal_simplices) {
      std::set<std::string> names;
      for (auto i : s) names.insert(rc.vertices[i]);
      out.insert(names);
    }
    return out;
  };
  std::mt19937_64 rng(62);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(cs.begin(), cs.end(), rng);
    EXPECT_EQ(key(torus_rips(cs, ExecPolicy{3})), key(a));
  }
}

TEST(Twist, CliqueDimension) {
  std::vector<std::int64_t> ns;
  for (std::int64_t n = 1; n <= 11; ++n) ns.push_back(n);
  const RipsComplex rc = twist_clique(ns);
  EXPECT_EQ(rc.dimension(), 10);
  EXPECT_EQ(rc.edges.size(), 55u);
  for (const auto& e : rc.edges) EXPECT_NE(e.certificate.find("axiom"), std::string::npos);
  for (std::int64_t D : {0, 1, 4, 20}) {
    std::vector<std::int64_t> ps;
    for (std::int64_t i = 0; i <= D; ++i) ps.push_back(3 * i + 2);
    EXPECT_EQ(twist_clique(ps).dimension(), D);
  }
  EXPECT_THROW(twist_clique({1, 2, 1}), std::invalid_argument);
  EXPECT_THROW(twist_clique({0}), std::domain_error);
}

TEST(Twist, JumpCosinesDistinct) {
  std::set<Rational> seen;
  for (std::int64_t n = 1; n <= 200; ++n) EXPECT_TRUE(seen.insert(twist_jump_cosine(n)).second) << n;
}
