#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library beyond reading plain data out of it.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "omsr/group.hpp"
#include "omsr/mcayley.hpp"

namespace oracle {

using Table = std::vector<std::vector<std::uint32_t>>;
using ArcSet = std::set<std::pair<std::uint32_t, std::uint32_t>>;

inline Table cyclic_table(std::uint32_t n) {
  Table t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      t[i][j] = (i + j) % n;
    }
  }
  return t;
}

// S3 as permutations of {0,1,2}, composed left factor first.
inline Table s3_table() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  Table t(6, std::vector<std::uint32_t>(6));
  for (std::size_t x = 0; x < 6; ++x) {
    for (std::size_t y = 0; y < 6; ++y) {
      std::vector<int> xy(3);
      for (int k = 0; k < 3; ++k) {
        xy[k] = perms[y][perms[x][k]];
      }
      t[x][y] = static_cast<std::uint32_t>(std::find(perms.begin(), perms.end(), xy) - perms.begin());
    }
  }
  return t;
}

inline bool associative(const Table& t) {
  const auto n = t.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (t[t[x][y]][z] != t[x][t[y][z]]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Arc set of Cay(G, T) straight from the definition (g_i, (t g)_j).
inline ArcSet mcayley_arcs(const omsr::Group& g, const omsr::ConnectionTable& t) {
  const auto n = g.order();
  const auto tab = g.table_rows();
  ArcSet arcs;
  for (std::size_t i = 0; i < t.m(); ++i) {
    for (std::size_t j = 0; j < t.m(); ++j) {
      for (auto s : t.at(i, j)) {
        for (std::uint32_t x = 0; x < n; ++x) {
          arcs.emplace(static_cast<std::uint32_t>(i * n + x),
                       static_cast<std::uint32_t>(j * n + tab[s.index][x]));
        }
      }
    }
  }
  return arcs;
}

// Every vertex permutation preserving `arcs`, by exhaustive enumeration.
inline std::vector<std::vector<std::uint32_t>> all_automorphisms(std::size_t n,
                                                                 const ArcSet& arcs) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0U);
  std::vector<std::vector<std::uint32_t>> out;
  do {
    bool ok = true;
    for (const auto& [u, v] : arcs) {
      if (!arcs.count({p[u], p[v]})) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.push_back(p);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Random table with each T(i,j) of size at most `max_size`.
inline omsr::ConnectionTable random_table(std::mt19937& rng, std::size_t n, std::size_t m,
                                          std::size_t max_size) {
  omsr::ConnectionTable t(m, n);
  std::uniform_int_distribution<std::size_t> size(0, max_size);
  std::uniform_int_distribution<std::uint32_t> elem(0, static_cast<std::uint32_t>(n - 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto k = size(rng);
      for (std::size_t c = 0; c < k; ++c) {
        t.add(i, j, omsr::Element{elem(rng)});
      }
    }
  }
  return t;
}

// Random table with row and column sums exactly 2 (a random pair of
// permutation-matrix layers over blocks, elements drawn freely).
inline omsr::ConnectionTable random_regular_table(std::mt19937& rng, std::size_t n,
                                                  std::size_t m) {
  while (true) {
    omsr::ConnectionTable t(m, n);
    std::uniform_int_distribution<std::uint32_t> elem(0, static_cast<std::uint32_t>(n - 1));
    for (int layer = 0; layer < 2; ++layer) {
      std::vector<std::size_t> p(m);
      std::iota(p.begin(), p.end(), 0U);
      std::shuffle(p.begin(), p.end(), rng);
      for (std::size_t i = 0; i < m; ++i) {
        t.add(i, p[i], omsr::Element{elem(rng)});
      }
    }
    bool ok = true;
    for (std::size_t i = 0; i < m; ++i) {
      ok = ok && t.row_size(i) == 2 && t.column_size(i) == 2;
    }
    if (ok) {
      return t;
    }
  }
}

}  // namespace oracle
