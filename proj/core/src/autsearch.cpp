#include "omsr/autsearch.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "omsr/error.hpp"

namespace omsr {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0U);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return;
    }
    if (size_[a] < size_[b]) {
      std::swap(a, b);
    }
    parent_[b] = a;
    size_[a] += size_[b];
  }
  std::size_t class_size(std::uint32_t x) { return size_[find(x)]; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::size_t> size_;
};

Coloring individualize(const Coloring& c, VertexId v) {
  Coloring out(c);
  out[v] = static_cast<std::uint32_t>(color_count(c));
  return out;
}

// Smallest non-singleton colour class; ties go to the smaller colour.
std::uint32_t target_cell(const Coloring& c) {
  std::vector<std::size_t> sizes(color_count(c), 0);
  for (auto x : c) {
    ++sizes[x];
  }
  std::uint32_t best = 0;
  std::size_t best_size = 0;
  for (std::uint32_t k = 0; k < sizes.size(); ++k) {
    if (sizes[k] > 1 && (best_size == 0 || sizes[k] < best_size)) {
      best = k;
      best_size = sizes[k];
    }
  }
  return best;
}

std::vector<VertexId> members(const Coloring& c, std::uint32_t color) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < c.size(); ++v) {
    if (c[v] == color) {
      out.push_back(v);
    }
  }
  return out;
}

// Class sizes and, per class, the sorted out-neighbour colours of one member.
// Equal for colourings related by an automorphism.
std::vector<std::uint32_t> quotient_invariant(const Digraph& g, const Coloring& c) {
  const auto k = color_count(c);
  std::vector<std::uint32_t> sizes(k, 0);
  std::vector<VertexId> rep(k, static_cast<VertexId>(-1));
  for (VertexId v = 0; v < c.size(); ++v) {
    if (sizes[c[v]]++ == 0) {
      rep[c[v]] = v;
    }
  }
  std::vector<std::uint32_t> inv{static_cast<std::uint32_t>(k)};
  inv.insert(inv.end(), sizes.begin(), sizes.end());
  std::vector<std::uint32_t> tmp;
  for (std::size_t col = 0; col < k; ++col) {
    tmp.clear();
    for (auto w : g.out_neighbors(rep[col])) {
      tmp.push_back(c[w]);
    }
    std::sort(tmp.begin(), tmp.end());
    inv.push_back(static_cast<std::uint32_t>(tmp.size()));
    inv.insert(inv.end(), tmp.begin(), tmp.end());
  }
  return inv;
}

class Searcher {
 public:
  Searcher(const Digraph& g, AutSearchStats& stats) : g_(g), stats_(stats) {}

  std::pair<std::vector<Permutation>, std::uint64_t> run() {
    const auto n = g_.vertex_count();
    Coloring c = refine_invariant(g_, uniform_coloring(n));
    ++stats_.nodes;
    invariants_.push_back(quotient_invariant(g_, c));
    while (!is_discrete(c)) {
      const auto cell = target_cell(c);
      const auto v = members(c, cell).front();
      path_.push_back(Level{c, cell, v});
      c = refine_invariant(g_, individualize(c, v));
      ++stats_.nodes;
      invariants_.push_back(quotient_invariant(g_, c));
    }
    leaf_vertex_of_color_.assign(n, 0);
    for (VertexId v = 0; v < n; ++v) {
      leaf_vertex_of_color_[c[v]] = v;
    }
    stats_.base_length = path_.size();

    std::vector<Permutation> gens;
    std::uint64_t order = 1;
    for (std::size_t k = path_.size(); k-- > 0;) {
      const auto& level = path_[k];
      UnionFind orbits(n);
      for (const auto& s : gens) {
        for (VertexId x = 0; x < n; ++x) {
          orbits.unite(x, s(x));
        }
      }
      for (auto w : members(level.coloring, level.cell)) {
        if (w == level.chosen || orbits.find(w) == orbits.find(level.chosen)) {
          continue;
        }
        Coloring next = refine_invariant(g_, individualize(level.coloring, w));
        ++stats_.nodes;
        if (quotient_invariant(g_, next) != invariants_[k + 1]) {
          continue;
        }
        if (auto sigma = descend(next, k + 1)) {
          for (VertexId x = 0; x < n; ++x) {
            orbits.unite(x, (*sigma)(x));
          }
          gens.push_back(std::move(*sigma));
        }
      }
      const auto orbit = static_cast<std::uint64_t>(orbits.class_size(level.chosen));
      if (__builtin_mul_overflow(order, orbit, &order)) {
        throw Error(ErrorKind::TooLarge, "automorphism group order exceeds 64 bits");
      }
    }
    return {std::move(gens), order};
  }

 private:
  struct Level {
    Coloring coloring;
    std::uint32_t cell;
    VertexId chosen;
  };

  std::optional<Permutation> descend(const Coloring& c, std::size_t depth) {
    if (depth == path_.size()) {
      ++stats_.leaves;
      std::vector<std::uint32_t> images(c.size());
      for (VertexId v = 0; v < c.size(); ++v) {
        images[leaf_vertex_of_color_[c[v]]] = v;
      }
      Permutation sigma(std::move(images));
      if (is_automorphism(g_, sigma)) {
        return sigma;
      }
      return std::nullopt;
    }
    for (auto w : members(c, path_[depth].cell)) {
      Coloring next = refine_invariant(g_, individualize(c, w));
      ++stats_.nodes;
      if (quotient_invariant(g_, next) != invariants_[depth + 1]) {
        continue;
      }
      if (auto sigma = descend(next, depth + 1)) {
        return sigma;
      }
    }
    return std::nullopt;
  }

  const Digraph& g_;
  AutSearchStats& stats_;
  std::vector<Level> path_;
  std::vector<std::vector<std::uint32_t>> invariants_;
  std::vector<VertexId> leaf_vertex_of_color_;
};

}  // namespace

PermutationGroup automorphisms(const Digraph& g, const AutOptions& options,
                               AutSearchStats* stats) {
  if (g.vertex_count() > options.vertex_cap) {
    throw Error(ErrorKind::TooLarge, "digraph has " + std::to_string(g.vertex_count()) +
                                         " vertices, above the cap of " +
                                         std::to_string(options.vertex_cap));
  }
  AutSearchStats local;
  AutSearchStats& s = stats ? *stats : local;
  s = AutSearchStats{};
  Searcher searcher(g, s);
  auto [gens, order] = searcher.run();
  s.orbit_product = order;
  PermutationGroup group(g.vertex_count(), std::move(gens));
  if (group.order() != order) {
    throw std::logic_error("search order " + std::to_string(order) +
                           " disagrees with stabilizer chain order " +
                           std::to_string(group.order()));
  }
  return group;
}

std::uint64_t automorphism_order(const Digraph& g, const AutOptions& options) {
  if (g.vertex_count() > options.vertex_cap) {
    throw Error(ErrorKind::TooLarge, "digraph has " + std::to_string(g.vertex_count()) +
                                         " vertices, above the cap of " +
                                         std::to_string(options.vertex_cap));
  }
  AutSearchStats stats;
  Searcher searcher(g, stats);
  return searcher.run().second;
}

PermutationGroup group_from_elements(std::size_t degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<Permutation> gens;
  std::vector<Permutation> generated{Permutation(degree)};
  for (const auto& e : elements) {
    if (std::binary_search(generated.begin(), generated.end(), e)) {
      continue;
    }
    gens.push_back(e);
    auto closure = enumerate_elements(degree, gens, elements.size() + 1);
    if (!closure) {
      throw std::logic_error("element list is not closed under composition");
    }
    generated = std::move(*closure);
  }
  if (generated != elements && !(elements.empty() && generated.size() == 1)) {
    throw std::logic_error("element list is not a group");
  }
  return PermutationGroup(degree, std::move(gens));
}

PermutationGroup brute_force_automorphisms(const Digraph& g) {
  const auto n = g.vertex_count();
  if (n > kBruteForceVertexCap) {
    throw Error(ErrorKind::TooLarge, "brute force is limited to " +
                                         std::to_string(kBruteForceVertexCap) + " vertices");
  }
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0U);
  std::vector<Permutation> found;
  do {
    Permutation sigma(images);
    if (is_automorphism(g, sigma)) {
      found.push_back(std::move(sigma));
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return group_from_elements(n, std::move(found));
}

bool brute_force_isomorphic(const Digraph& a, const Digraph& b) {
  const auto n = a.vertex_count();
  if (n != b.vertex_count() || a.arc_count() != b.arc_count()) {
    return false;
  }
  if (n > kBruteForceVertexCap) {
    throw Error(ErrorKind::TooLarge, "brute force is limited to " +
                                         std::to_string(kBruteForceVertexCap) + " vertices");
  }
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0U);
  do {
    bool ok = true;
    for (VertexId u = 0; u < n && ok; ++u) {
      for (auto v : a.out_neighbors(u)) {
        if (!b.has_arc(images[u], images[v])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      return true;
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return false;
}

}  // namespace omsr
