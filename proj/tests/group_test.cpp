#include <array>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "omsr/catalog.hpp"
#include "omsr/error.hpp"
#include "omsr/group.hpp"

namespace {

using omsr::Element;
using omsr::ErrorKind;

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const omsr::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no omsr::Error thrown";
  return ErrorKind::InvalidArgument;
}

omsr::CatalogEntry cat(std::string_view name, std::initializer_list<long long> p = {}) {
  std::vector<long long> v(p);
  return omsr::catalog_group(name, v);
}

TEST(CayleyTable, TrivialAndZ2) {
  auto z1 = omsr::group_from_cayley_table({{0}});
  EXPECT_EQ(z1.order(), 1u);
  auto z2 = omsr::group_from_cayley_table({{0, 1}, {1, 0}});
  EXPECT_EQ(z2.order(), 2u);
  EXPECT_EQ(z2.inv(Element{1}), Element{1});
}

TEST(CayleyTable, RejectsNonAssociativeLoop) {
  // Latin square with identity 0 and two-sided inverses, but not a group.
  const oracle::Table loop{{0, 1, 2, 3, 4},
                           {1, 0, 3, 4, 2},
                           {2, 4, 0, 1, 3},
                           {3, 2, 4, 0, 1},
                           {4, 3, 1, 2, 0}};
  ASSERT_FALSE(oracle::associative(loop));
  try {
    omsr::group_from_cayley_table(loop);
    FAIL();
  } catch (const omsr::Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAGroup);
    EXPECT_NE(std::string(e.what()).find("("), std::string::npos);
  }
}

TEST(CayleyTable, RejectsMutatedS3) {
  auto t = oracle::s3_table();
  t[2][3] = t[2][4];
  EXPECT_EQ(kind_of([&] { omsr::group_from_cayley_table(t); }), ErrorKind::NotAGroup);
}

TEST(CayleyTable, RejectsOutOfRangeAndRagged) {
  EXPECT_EQ(kind_of([] { omsr::group_from_cayley_table({{0, 1}, {1, 2}}); }),
            ErrorKind::NotAGroup);
  EXPECT_EQ(kind_of([] { omsr::group_from_cayley_table({{0, 1}, {1}}); }),
            ErrorKind::NotAGroup);
}

TEST(CayleyTable, RelabelsIdentityToZero) {
  // Z3 with the identity stored at index 2.
  const oracle::Table t{{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  auto g = omsr::group_from_cayley_table(t);
  for (std::uint32_t x = 0; x < 3; ++x) {
    EXPECT_EQ(g.mul(omsr::kIdentity, Element{x}), Element{x});
    EXPECT_EQ(g.mul(Element{x}, omsr::kIdentity), Element{x});
  }
}

TEST(CayleyTable, LargeGroupsUseSampledAssociativity) {
  EXPECT_EQ(cat("cyclic", {12}).group.associativity_check(),
            omsr::AssociativityCheck::Exhaustive);
  EXPECT_EQ(cat("cyclic", {600}).group.associativity_check(), omsr::AssociativityCheck::Sampled);
}

TEST(PermutationGenerators, Examples) {
  auto [z3, g3] = omsr::group_from_permutation_generators({{1, 2, 0}});
  EXPECT_EQ(z3.order(), 3u);
  EXPECT_EQ(omsr::element_order(z3, g3[0]), 3u);

  auto [s3, gs] = omsr::group_from_permutation_generators({{1, 2, 0}, {1, 0, 2}});
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_NE(s3.mul(gs[0], gs[1]), s3.mul(gs[1], gs[0]));

  auto [v4, gv] = omsr::group_from_permutation_generators({{1, 0, 3, 2}, {2, 3, 0, 1}});
  EXPECT_EQ(v4.order(), 4u);
  for (std::uint32_t x = 1; x < 4; ++x) {
    EXPECT_EQ(omsr::element_order(v4, Element{x}), 2u);
  }
}

TEST(PermutationGenerators, OrderCap) {
  EXPECT_EQ(kind_of([] {
              omsr::group_from_permutation_generators({{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, "S5",
                                                      100);
            }),
            ErrorKind::TooLarge);
}

TEST(PermutationGenerators, RoundTripsThroughCayleyTable) {
  auto [g, gens] = omsr::group_from_permutation_generators({{1, 2, 3, 0}, {3, 2, 1, 0}});
  auto h = omsr::group_from_cayley_table(g.table_rows());
  EXPECT_EQ(h.table_rows(), g.table_rows());
}

TEST(Catalog, Examples) {
  auto z5 = cat("cyclic", {5});
  EXPECT_EQ(z5.group.order(), 5u);
  EXPECT_EQ(omsr::element_order(z5.group, z5.pair.a), 5u);
  EXPECT_FALSE(z5.pair.b);

  auto v4 = cat("elementary_abelian_2", {2});
  EXPECT_EQ(v4.group.label(), "Z2^2");
  ASSERT_TRUE(v4.pair.b);
  const std::array<Element, 2> ab{v4.pair.a, *v4.pair.b};
  EXPECT_TRUE(omsr::generates(v4.group, ab));

  auto a5 = cat("alternating", {5});
  EXPECT_EQ(a5.group.order(), 60u);
  const std::array<Element, 2> gens{a5.pair.a, *a5.pair.b};
  EXPECT_TRUE(omsr::generates(a5.group, gens));

  EXPECT_EQ(cat("dihedral", {4}).group.order(), 8u);
  EXPECT_EQ(cat("quaternion").group.order(), 8u);
  EXPECT_EQ(cat("symmetric", {4}).group.order(), 24u);
  EXPECT_EQ(cat("dicyclic", {3}).group.order(), 12u);
  EXPECT_EQ(cat("abelian", {2, 4}).group.order(), 8u);
}

TEST(Catalog, Errors) {
  EXPECT_EQ(kind_of([] { cat("mathieu", {11}); }), ErrorKind::UnknownFamily);
  EXPECT_EQ(kind_of([] { cat("cyclic", {5000}); }), ErrorKind::TooLarge);
  EXPECT_EQ(kind_of([] { cat("cyclic", {0}); }), ErrorKind::InvalidArgument);
}

TEST(Catalog, TwoGeneratedListingCountsIsomorphismClasses) {
  // Groups of order n up to isomorphism, minus Z2^3 (three generators).
  const std::array<int, 16> expected{0, 1, 1, 1, 2, 1, 2, 1, 4, 2, 2, 1, 5, 1, 2, 1};
  std::array<int, 16> seen{};
  for (const auto& e : omsr::two_generated_groups_up_to(15)) {
    ++seen[e.group.order()];
  }
  EXPECT_EQ(seen, expected);
}

TEST(ElementOrder, Examples) {
  auto z5 = cat("cyclic", {5});
  EXPECT_EQ(omsr::element_order(z5.group, omsr::kIdentity), 1u);
  EXPECT_EQ(omsr::element_order(z5.group, z5.pair.a), 5u);
  auto v4 = cat("elementary_abelian_2", {2});
  EXPECT_EQ(omsr::element_order(v4.group, v4.group.mul(v4.pair.a, *v4.pair.b)), 2u);
}

TEST(IsAbelian, Examples) {
  EXPECT_TRUE(omsr::is_abelian(cat("cyclic", {5}).group));
  EXPECT_FALSE(omsr::is_abelian(omsr::group_from_cayley_table(oracle::s3_table())));
  EXPECT_TRUE(omsr::is_abelian(cat("elementary_abelian_2", {2}).group));
}

TEST(Generates, Examples) {
  auto z5 = cat("cyclic", {5});
  const std::array<Element, 1> a{z5.pair.a};
  EXPECT_TRUE(omsr::generates(z5.group, a));
  auto z4 = cat("cyclic", {4});
  const std::array<Element, 1> a2{z4.group.pow(z4.pair.a, 2)};
  EXPECT_FALSE(omsr::generates(z4.group, a2));
  auto s3 = cat("symmetric", {3});
  const std::array<Element, 2> ab{s3.pair.a, *s3.pair.b};
  EXPECT_TRUE(omsr::generates(s3.group, ab));
}

TEST(NormalizePair, Examples) {
  auto v4 = cat("elementary_abelian_2", {2});
  EXPECT_TRUE(std::holds_alternative<omsr::AllInvolutions>(
      omsr::normalize_generating_pair(v4.group, v4.pair.a, *v4.pair.b)));

  auto s3 = cat("symmetric", {3});
  Element r = s3.pair.a, s = *s3.pair.b;
  if (omsr::element_order(s3.group, r) != 2) {
    std::swap(r, s);
  }
  ASSERT_EQ(omsr::element_order(s3.group, r), 2u);
  ASSERT_EQ(omsr::element_order(s3.group, s), 3u);
  auto np = std::get<omsr::NormalizedPair>(omsr::normalize_generating_pair(s3.group, r, s));
  EXPECT_EQ(np.a, s);
  EXPECT_EQ(np.b, r);

  auto z24 = cat("abelian", {2, 4});
  const Element a{4}, b{1};  // (1,0) and (0,1)
  ASSERT_EQ(omsr::element_order(z24.group, a), 2u);
  ASSERT_EQ(omsr::element_order(z24.group, b), 4u);
  auto n2 = std::get<omsr::NormalizedPair>(omsr::normalize_generating_pair(z24.group, a, b));
  EXPECT_EQ(n2.a, b);
  EXPECT_EQ(n2.b, a);

  auto z4 = cat("cyclic", {4});
  EXPECT_EQ(kind_of([&] {
              omsr::normalize_generating_pair(z4.group, z4.group.pow(z4.pair.a, 2),
                                              omsr::kIdentity);
            }),
            ErrorKind::NotGenerating);
}

class CatalogProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(CatalogProperties, AssociativityAndLagrange) {
  const auto entry = omsr::two_generated_groups_up_to(24)[GetParam()];
  const auto rows = entry.group.table_rows();
  EXPECT_TRUE(oracle::associative(rows)) << entry.group.label();
  for (std::uint32_t x = 0; x < entry.group.order(); ++x) {
    EXPECT_EQ(entry.group.order() % omsr::element_order(entry.group, Element{x}), 0u);
  }
}

TEST_P(CatalogProperties, NormalizedPairsGenerate) {
  const auto entry = omsr::two_generated_groups_up_to(24)[GetParam()];
  const auto& g = entry.group;
  std::mt19937 rng(static_cast<unsigned>(GetParam()) * 7919u + 1u);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g.order() - 1));
  int tried = 0;
  for (int k = 0; k < 400 && tried < 25; ++k) {
    const Element a{pick(rng)}, b{pick(rng)};
    const std::array<Element, 2> ab{a, b};
    if (!omsr::generates(g, ab)) {
      continue;
    }
    ++tried;
    auto r = omsr::normalize_generating_pair(g, a, b);
    if (auto* np = std::get_if<omsr::NormalizedPair>(&r)) {
      const std::array<Element, 2> out{np->a, np->b};
      EXPECT_TRUE(omsr::generates(g, out));
      EXPECT_GE(omsr::element_order(g, np->a), 3u);
    } else {
      EXPECT_TRUE(g.label() == "Z1" || g.label() == "Z2" || g.label() == "Z2^2") << g.label();
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    UpTo24, CatalogProperties,
    ::testing::Range<std::size_t>(0, omsr::two_generated_groups_up_to(24).size()));

}  // namespace
