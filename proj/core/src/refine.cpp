#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "omsr/autsearch.hpp"

namespace omsr {

std::size_t default_vertex_cap() {
  if (const char* env = std::getenv("OMSR_VERTEX_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return static_cast<std::size_t>(v);
    }
  }
  return kDefaultVertexCap;
}

Coloring uniform_coloring(std::size_t n) { return Coloring(n, 0); }

std::size_t color_count(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

bool is_discrete(const Coloring& c) { return color_count(c) == c.size(); }

Coloring refine_invariant(const Digraph& g, Coloring color) {
  const auto n = g.vertex_count();
  if (n == 0) {
    return color;
  }
  // Normalise the input to ranks of its own values.
  {
    std::vector<std::uint32_t> values(color);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (auto& c : color) {
      c = static_cast<std::uint32_t>(std::lower_bound(values.begin(), values.end(), c) -
                                     values.begin());
    }
  }
  std::size_t classes = color_count(color);
  std::vector<std::vector<std::uint32_t>> sig(n);
  std::vector<VertexId> order(n);
  while (true) {
    for (VertexId v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(color[v]);
      const auto out = g.out_neighbors(v);
      const auto in = g.in_neighbors(v);
      s.push_back(static_cast<std::uint32_t>(out.size()));
      const auto mid = s.size();
      for (auto w : out) {
        s.push_back(color[w]);
      }
      std::sort(s.begin() + static_cast<std::ptrdiff_t>(mid), s.end());
      const auto mid2 = s.size();
      for (auto w : in) {
        s.push_back(color[w]);
      }
      std::sort(s.begin() + static_cast<std::ptrdiff_t>(mid2), s.end());
    }
    std::iota(order.begin(), order.end(), 0U);
    std::sort(order.begin(), order.end(),
              [&](VertexId a, VertexId b) { return sig[a] < sig[b]; });
    Coloring next(n);
    std::uint32_t rank = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0 && sig[order[k]] != sig[order[k - 1]]) {
        ++rank;
      }
      next[order[k]] = rank;
    }
    const std::size_t next_classes = rank + 1;
    color = std::move(next);
    if (next_classes == classes) {
      return color;
    }
    classes = next_classes;
  }
}

Coloring refine(const Digraph& g, const Coloring& initial) {
  Coloring stable = refine_invariant(g, initial);
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> relabel(stable.size(), kUnset);
  std::uint32_t next = 0;
  for (auto& c : stable) {
    if (relabel[c] == kUnset) {
      relabel[c] = next++;
    }
    c = relabel[c];
  }
  return stable;
}

}  // namespace omsr
