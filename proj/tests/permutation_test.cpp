#include <random>
#include <set>

#include <gtest/gtest.h>

#include "omsr/error.hpp"
#include "omsr/permutation.hpp"

namespace {

using omsr::Permutation;

Permutation random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0U);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

TEST(Permutation, LeftFactorAppliesFirst) {
  const Permutation p({1, 2, 0});  // 0->1->2->0
  const Permutation q({1, 0, 2});  // swap 0,1
  const auto pq = p * q;
  for (std::uint32_t x = 0; x < 3; ++x) {
    EXPECT_EQ(pq(x), q(p(x)));
  }
}

TEST(Permutation, CycleStringRoundTrip) {
  std::mt19937 rng(3);
  for (int k = 0; k < 50; ++k) {
    const auto p = random_perm(rng, 7);
    EXPECT_EQ(omsr::parse_permutation(p.to_cycle_string(), 7), p);
  }
  EXPECT_EQ(Permutation(4).to_cycle_string(), "()");
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation(std::vector<std::uint32_t>{0, 0, 1}), omsr::Error);
  EXPECT_THROW(Permutation(std::vector<std::uint32_t>{0, 3}), omsr::Error);
}

TEST(CycleNotation, ErrorsCarryColumns) {
  try {
    omsr::parse_cycle_notation("(0 1)(2 x)", 4);
    FAIL();
  } catch (const omsr::Error& e) {
    EXPECT_EQ(e.kind(), omsr::ErrorKind::Parse);
    EXPECT_EQ(e.line(), 4);
    EXPECT_EQ(e.column(), 9);
  }
  EXPECT_THROW(omsr::parse_cycle_notation("(0 1 0)"), omsr::Error);
}

// Elements of <gens> by naive closure over a std::set, no chain involved.
std::set<Permutation> naive_closure(const std::vector<Permutation>& gens, std::size_t n) {
  std::set<Permutation> seen{Permutation(n)};
  std::vector<Permutation> frontier{Permutation(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        auto y = x * g;
        if (seen.insert(y).second) {
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

TEST(StabilizerChain, OrderMatchesNaiveClosure) {
  std::mt19937 rng(11);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 3 + k % 5;
    std::vector<Permutation> gens;
    const int count = 1 + k % 3;
    for (int i = 0; i < count; ++i) {
      gens.push_back(random_perm(rng, n));
    }
    const auto closure = naive_closure(gens, n);
    omsr::StabilizerChain chain(n, gens);
    EXPECT_EQ(chain.order(), closure.size());
    for (const auto& e : closure) {
      EXPECT_TRUE(chain.contains(e));
    }
    const auto outsider = random_perm(rng, n);
    EXPECT_EQ(chain.contains(outsider), closure.count(outsider) == 1);
  }
}

TEST(PermutationGroup, OrbitsAndStabilizer) {
  // <(0 1 2 3), (4 5)> on 6 points: orbits {0..3}, {4,5}.
  omsr::PermutationGroup g(6, {Permutation({1, 2, 3, 0, 4, 5}), Permutation({0, 1, 2, 3, 5, 4})});
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.orbit_count(), 2u);
  EXPECT_EQ(g.orbit(2).size(), 4u);
  const auto st = omsr::stabilizer(g, 0);
  EXPECT_EQ(st.order(), 2u);
  for (const auto& s : st.generators()) {
    EXPECT_EQ(s(0), 0u);
  }
}

TEST(PermutationGroup, RegularCyclicStabilizerIsTrivial) {
  omsr::PermutationGroup g(7, {Permutation({1, 2, 3, 4, 5, 6, 0})});
  EXPECT_EQ(g.order(), 7u);
  EXPECT_EQ(omsr::stabilizer(g, 3).order(), 1u);
}

TEST(PermutationGroup, JsonForm) {
  omsr::PermutationGroup g(3, {Permutation({1, 2, 0})});
  EXPECT_EQ(g.to_json(), R"j({"degree":3,"generators":["(0 1 2)"],"order":3})j");
}

}  // namespace
