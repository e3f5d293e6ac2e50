#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "omsr/permutation.hpp"

namespace omsr {

using VertexId = std::uint32_t;
using Arc = std::pair<VertexId, VertexId>;

// Simple digraph with sorted out- and in-adjacency. Parallel arcs collapse.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t vertex_count, std::span<const Arc> arcs);

  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arc_count_; }

  std::span<const VertexId> out_neighbors(VertexId v) const { return out_[v]; }
  std::span<const VertexId> in_neighbors(VertexId v) const { return in_[v]; }
  bool has_arc(VertexId u, VertexId v) const;

  std::vector<Arc> arcs() const;

 private:
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::size_t arc_count_ = 0;
};

// No loops and no pair of opposite arcs.
bool is_oriented(const Digraph& g);
bool is_k_regular(const Digraph& g, std::size_t k);
bool is_strongly_connected(const Digraph& g);
bool is_weakly_connected(const Digraph& g);

// Union of the out-neighbourhoods of v's out-neighbours. May contain v.
std::vector<VertexId> distance2_out_set(const Digraph& g, VertexId v);

// v together with everything reachable by a directed path of length <= 2.
std::vector<VertexId> out_ball2(const Digraph& g, VertexId v);

struct InducedSubdigraph {
  Digraph graph;
  std::vector<VertexId> labels;  // new vertex i was labels[i] in the parent
};

InducedSubdigraph induced_subdigraph(const Digraph& g, std::span<const VertexId> vertices);

// sigma maps arcs onto arcs (hence bijectively, for a permutation).
bool is_automorphism(const Digraph& g, const Permutation& sigma);

Digraph relabel(const Digraph& g, const Permutation& pi);

}  // namespace omsr
