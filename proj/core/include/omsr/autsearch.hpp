#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "omsr/digraph.hpp"
#include "omsr/permutation.hpp"

namespace omsr {

// Vertex colouring with colours 0..k-1.
using Coloring = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultVertexCap = 512;
inline constexpr std::size_t kBruteForceVertexCap = 8;

// kDefaultVertexCap unless OMSR_VERTEX_CAP holds a positive integer.
std::size_t default_vertex_cap();

Coloring uniform_coloring(std::size_t n);
std::size_t color_count(const Coloring& c);
bool is_discrete(const Coloring& c);

// Coarsest stable refinement of `initial`: two vertices keep a common colour
// only if they agree on colour and on the multisets of out- and in-neighbour
// colours. Colours are numbered by first occurrence in vertex order.
Coloring refine(const Digraph& g, const Coloring& initial);

// Same partition as refine(), but colours are ranked by their refinement
// signature, so relabelling the digraph relabels the colouring with it.
Coloring refine_invariant(const Digraph& g, Coloring initial);

struct AutOptions {
  std::size_t vertex_cap = default_vertex_cap();
};

struct AutSearchStats {
  std::size_t nodes = 0;        // refinements performed
  std::size_t leaves = 0;       // leaf candidates checked
  std::size_t base_length = 0;  // depth of the first path
  std::uint64_t orbit_product = 1;
};

// Full automorphism group by individualisation-refinement. The order is the
// product of basic orbit lengths along the first path and is re-derived from
// the returned generators by a stabilizer chain (and by closure when small);
// any disagreement throws std::logic_error. Throws Error{TooLarge} above the
// vertex cap.
PermutationGroup automorphisms(const Digraph& g, const AutOptions& options = {},
                               AutSearchStats* stats = nullptr);

// Order only, from the same search; skips the stabilizer chain.
std::uint64_t automorphism_order(const Digraph& g, const AutOptions& options = {});

// Every one of the N! bijections, filtered by arc preservation (N <= 8).
PermutationGroup brute_force_automorphisms(const Digraph& g);

// Brute-force isomorphism test for digraphs on at most 8 vertices.
bool brute_force_isomorphic(const Digraph& a, const Digraph& b);

// Group generated by a greedily chosen subset of `elements`; `elements` must
// be closed under composition (checked).
PermutationGroup group_from_elements(std::size_t degree, std::vector<Permutation> elements);

}  // namespace omsr
