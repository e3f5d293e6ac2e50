#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "json.hpp"
#include "oracles.hpp"
#include "omsr/catalog.hpp"
#include "omsr/error.hpp"
#include "omsr/sweep.hpp"

namespace {

using omsr::SweepVerdict;

omsr::CatalogEntry cat(std::string_view name, std::initializer_list<long long> p = {}) {
  std::vector<long long> v(p);
  return omsr::catalog_group(name, v);
}

omsr::SweepResult sweep(const omsr::Group& g, std::size_t m, bool all = false) {
  omsr::SweepOptions opts;
  if (all) {
    opts.max_stored_witnesses = std::numeric_limits<std::size_t>::max();
  }
  return omsr::exhaustive_sweep(g, m, opts);
}

TEST(Sweep, TrivialGroupBoundary) {
  auto z1 = cat("cyclic", {1});
  for (std::size_t m = 2; m <= 6; ++m) {
    const auto r = sweep(z1.group, m);
    EXPECT_EQ(r.verdict, SweepVerdict::NotExists) << m;
    EXPECT_TRUE(r.witnesses.empty());
    EXPECT_TRUE(r.complete);
  }
  const auto r7 = sweep(z1.group, 7);
  EXPECT_EQ(r7.verdict, SweepVerdict::Exists);
  ASSERT_FALSE(r7.witnesses.empty());
  EXPECT_EQ(r7.witnesses.front().aut_order, 1u);
  EXPECT_EQ(r7.tables_enumerated, 3110940u);
  EXPECT_EQ(r7.oriented_count, 27900u);
  EXPECT_EQ(r7.witness_count, 20160u);
  EXPECT_EQ(r7.witnesses.size(), 64u);
}

TEST(Sweep, KleinFourAtTwoBlocks) {
  auto v4 = cat("elementary_abelian_2", {2});
  const auto r = sweep(v4.group, 2);
  EXPECT_EQ(r.verdict, SweepVerdict::NotExists);
  EXPECT_EQ(r.oriented_count, 6u);
  EXPECT_EQ(r.max_aut_order_seen, 64u);
}

TEST(Sweep, KleinFourAtThreeBlocks) {
  auto v4 = cat("elementary_abelian_2", {2});
  const auto r = sweep(v4.group, 3);
  EXPECT_EQ(r.verdict, SweepVerdict::Exists);
  EXPECT_EQ(r.tables_enumerated, 39696u);
  EXPECT_EQ(r.oriented_count, 2160u);
  EXPECT_EQ(r.witness_count, 1152u);
}

// Every oriented 2-regular table over Z2 on three blocks has |Aut| in {6, 24};
// an exhaustive census of oriented 2-regular digraphs on 6 vertices agrees.
TEST(Sweep, Z2ThreeBlocksHasNoWitness) {
  auto z2 = cat("cyclic", {2});
  const auto r = sweep(z2.group, 3);
  EXPECT_EQ(r.verdict, SweepVerdict::NotExists);
  EXPECT_EQ(r.tables_enumerated, 534u);
  EXPECT_EQ(r.oriented_count, 10u);
  EXPECT_EQ(r.min_aut_order_seen, 6u);
  EXPECT_EQ(r.max_aut_order_seen, 24u);
  const auto r4 = sweep(z2.group, 4);
  EXPECT_EQ(r4.verdict, SweepVerdict::Exists);
  EXPECT_EQ(r4.oriented_count, 822u);
  EXPECT_EQ(r4.witness_count, 576u);
}

TEST(Sweep, StopAtFirstWitness) {
  auto z1 = cat("cyclic", {1});
  omsr::SweepOptions opts;
  opts.stop_at_first_witness = true;
  const auto r = omsr::exhaustive_sweep(z1.group, 7, opts);
  EXPECT_EQ(r.verdict, SweepVerdict::Exists);
  EXPECT_FALSE(r.complete);
  EXPECT_EQ(r.witnesses.size(), 1u);
}

TEST(Sweep, Guard) {
  auto z5 = cat("cyclic", {5});
  EXPECT_FALSE(omsr::sweep_is_feasible(5, 4, {}));
  EXPECT_TRUE(omsr::sweep_is_feasible(4, 4, {}));
  EXPECT_TRUE(omsr::sweep_is_feasible(1, 10, {}));
  EXPECT_FALSE(omsr::sweep_is_feasible(1, 17, {}));
  try {
    omsr::exhaustive_sweep(z5.group, 4);
    FAIL();
  } catch (const omsr::Error& e) {
    EXPECT_EQ(e.kind(), omsr::ErrorKind::InfeasibleSweep);
  }
  omsr::SweepOptions loose;
  loose.guard_product = 20;
  EXPECT_TRUE(omsr::sweep_is_feasible(5, 4, loose));
}

TEST(Sweep, JsonForm) {
  auto z1 = cat("cyclic", {1});
  const auto j = nlohmann::json::parse(sweep(z1.group, 3).to_json(true));
  EXPECT_EQ(j["verdict"], "NOT_EXISTS");
  EXPECT_EQ(j["tables_enumerated"], 6);
  EXPECT_EQ(j["oriented_count"], 0);
  EXPECT_TRUE(j["witnesses"].empty());
}

// A001499: n x n 0/1 matrices with two ones in every row and column.
TEST(CountFamilies, TrivialGroupMatchesKnownSequence) {
  const std::uint64_t known[] = {1, 0, 1, 6, 90, 2040, 67950, 3110940, 187530840};
  for (std::size_t m = 1; m <= 8; ++m) {
    EXPECT_EQ(omsr::count_constrained_families(1, m, 2), known[m]) << m;
  }
}

struct Recount {
  std::uint64_t families = 0;
  std::uint64_t oriented = 0;
};

// Direct generator: each row picks `valency` distinct (column, element) cells
// out of the n*m available; column sums are checked only at the leaves.
Recount direct_recount(const omsr::Group& g, std::size_t m, std::size_t valency) {
  const std::size_t n = g.order(), cells = n * m;
  std::vector<std::vector<std::uint32_t>> subsets;
  std::vector<std::uint32_t> cur;
  std::function<void(std::uint32_t)> choose = [&](std::uint32_t from) {
    if (cur.size() == valency) {
      subsets.push_back(cur);
      return;
    }
    for (std::uint32_t c = from; c < cells; ++c) {
      cur.push_back(c);
      choose(c + 1);
      cur.pop_back();
    }
  };
  choose(0);

  Recount out;
  std::vector<std::size_t> pick(m);
  std::function<void(std::size_t)> rows = [&](std::size_t i) {
    if (i == m) {
      std::vector<std::size_t> col(m, 0);
      for (std::size_t r = 0; r < m; ++r) {
        for (auto c : subsets[pick[r]]) {
          ++col[c / n];
        }
      }
      for (auto s : col) {
        if (s != valency) {
          return;
        }
      }
      ++out.families;
      omsr::ConnectionTable t(m, n);
      for (std::size_t r = 0; r < m; ++r) {
        for (auto c : subsets[pick[r]]) {
          t.add(r, c / n, omsr::Element{static_cast<std::uint32_t>(c % n)});
        }
      }
      const auto arcs = oracle::mcayley_arcs(g, t);
      bool oriented = true;
      for (const auto& [u, v] : arcs) {
        if (u == v || arcs.count({v, u})) {
          oriented = false;
          break;
        }
      }
      out.oriented += oriented ? 1 : 0;
      return;
    }
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      pick[i] = s;
      rows(i + 1);
    }
  };
  rows(0);
  return out;
}

TEST(CountFamilies, MatchesDirectRecount) {
  struct Case {
    const char* name;
    std::vector<long long> params;
    std::size_t max_m;
  };
  const std::vector<Case> cases{{"cyclic", {1}, 6},
                                {"cyclic", {2}, 4},
                                {"cyclic", {3}, 2},
                                {"cyclic", {4}, 2},
                                {"elementary_abelian_2", {2}, 2},
                                {"symmetric", {3}, 1},
                                {"cyclic", {8}, 1},
                                {"quaternion", {}, 1}};
  for (const auto& c : cases) {
    const auto e = omsr::catalog_group(c.name, c.params);
    for (std::size_t m = 1; m <= c.max_m; ++m) {
      const auto direct = direct_recount(e.group, m, 2);
      EXPECT_EQ(omsr::count_constrained_families(e.group.order(), m, 2), direct.families)
          << e.group.label() << " m=" << m;
      const auto r = omsr::exhaustive_sweep(e.group, m);
      EXPECT_EQ(r.tables_enumerated, direct.families) << e.group.label() << " m=" << m;
      EXPECT_EQ(r.oriented_count, direct.oriented) << e.group.label() << " m=" << m;
    }
  }
}

// Conjugate the Cayley table by a random bijection fixing the identity.
omsr::Group shuffled(const omsr::Group& g, std::mt19937& rng) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0U);
  std::shuffle(p.begin() + 1, p.end(), rng);
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      t[p[x]][p[y]] = p[g.mul(omsr::Element{x}, omsr::Element{y}).index];
    }
  }
  return omsr::group_from_cayley_table(t, g.label() + "'");
}

TEST(SweepProperties, StableUnderRelabelling) {
  std::mt19937 rng(5);
  const std::vector<std::pair<omsr::CatalogEntry, std::size_t>> cases{
      {cat("elementary_abelian_2", {2}), 2}, {cat("elementary_abelian_2", {2}), 3},
      {cat("cyclic", {4}), 2},               {cat("cyclic", {3}), 3},
      {cat("cyclic", {2}), 4},               {cat("symmetric", {3}), 2}};
  for (const auto& [e, m] : cases) {
    const auto a = sweep(e.group, m);
    for (int k = 0; k < 2; ++k) {
      const auto b = sweep(shuffled(e.group, rng), m);
      EXPECT_EQ(a.verdict, b.verdict) << e.group.label() << " m=" << m;
      EXPECT_EQ(a.witness_count, b.witness_count) << e.group.label() << " m=" << m;
      EXPECT_EQ(a.oriented_count, b.oriented_count);
    }
  }
}

TEST(SweepProperties, WitnessesReverifyFromText) {
  for (auto [e, m] : {std::pair{cat("elementary_abelian_2", {2}), std::size_t{3}},
                      std::pair{cat("cyclic", {2}), std::size_t{4}},
                      std::pair{cat("cyclic", {3}), std::size_t{2}}}) {
    const auto r = sweep(e.group, m, true);
    ASSERT_EQ(r.witnesses.size(), r.witness_count);
    EXPECT_EQ(r.verdict == SweepVerdict::Exists, !r.witnesses.empty());
    for (std::size_t k = 1; k < r.witnesses.size(); ++k) {
      EXPECT_LT(r.witnesses[k - 1].table.to_text(), r.witnesses[k].table.to_text());
    }
    for (const auto& w : r.witnesses) {
      const auto t = omsr::parse_connection_table(w.table.to_text(), e.group.order());
      const auto rep = omsr::is_omsr(omsr::build_mcayley(e.group, t));
      EXPECT_TRUE(rep.omsr);
      EXPECT_EQ(rep.aut_order, e.group.order());
      EXPECT_EQ(rep.connected, w.connected);
    }
  }
}

TEST(RandomSearch, FindsVerifiedWitnesses) {
  for (auto [e, m] : {std::pair{cat("cyclic", {1}), std::size_t{8}},
                      std::pair{cat("cyclic", {2}), std::size_t{5}},
                      std::pair{cat("elementary_abelian_2", {2}), std::size_t{4}}}) {
    const auto t = omsr::random_witness_search(e.group, m);
    ASSERT_TRUE(t) << e.group.label() << " m=" << m;
    EXPECT_TRUE(omsr::is_omsr(omsr::build_mcayley(e.group, *t)).omsr);
  }
}

TEST(RandomSearch, GivesUpWhenNoneExist) {
  auto z1 = cat("cyclic", {1});
  omsr::RandomSearchOptions opts;
  opts.attempts = 50;
  EXPECT_FALSE(omsr::random_witness_search(z1.group, 4, opts));
}

}  // namespace
