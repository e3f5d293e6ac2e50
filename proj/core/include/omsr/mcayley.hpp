#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "omsr/digraph.hpp"
#include "omsr/group.hpp"
#include "omsr/permutation.hpp"

namespace omsr {

// The vertex g_i of G x Z_m. Its canonical number is i*|G| + g.
struct Vertex {
  Element g;
  std::uint32_t block = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// m x m family of subsets T(i,j) of a group of order n. Each set is kept
// sorted without duplicates.
class ConnectionTable {
 public:
  ConnectionTable(std::size_t m, std::size_t group_order);

  std::size_t m() const noexcept { return m_; }
  std::size_t group_order() const noexcept { return n_; }

  const std::vector<Element>& at(std::size_t i, std::size_t j) const { return sets_[i * m_ + j]; }
  void set(std::size_t i, std::size_t j, std::vector<Element> elements);
  void add(std::size_t i, std::size_t j, Element e);

  // sum_j |T(i,j)| and sum_i |T(i,j)|
  std::size_t row_size(std::size_t i) const;
  std::size_t column_size(std::size_t j) const;
  std::size_t total_size() const;

  // Text form: "m: <int>" then one "T i j : e1 e2 ..." line per non-empty set.
  std::string to_text() const;

  friend bool operator==(const ConnectionTable&, const ConnectionTable&) = default;

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<std::vector<Element>> sets_;
};

// Parses the text form; every element must be below `group_order`.
// Lines starting with '#' are comments. Throws Error{Parse} with location.
ConnectionTable parse_connection_table(std::string_view text, std::size_t group_order);

// No loop (1 in T(i,i)) and no digon (T(i,j) meets T(j,i)^-1).
bool table_is_oriented(const Group& group, const ConnectionTable& table);

class MCayleyDigraph {
 public:
  MCayleyDigraph(Group group, ConnectionTable table, Digraph graph)
      : group_(std::move(group)), table_(std::move(table)), graph_(std::move(graph)) {}

  const Group& group() const noexcept { return group_; }
  const ConnectionTable& table() const noexcept { return table_; }
  const Digraph& graph() const noexcept { return graph_; }
  std::size_t m() const noexcept { return table_.m(); }

  VertexId id(Vertex v) const {
    return static_cast<VertexId>(v.block * group_.order() + v.g.index);
  }
  VertexId id(Element g, std::uint32_t block) const { return id(Vertex{g, block}); }
  Vertex vertex(VertexId id) const {
    const auto n = static_cast<VertexId>(group_.order());
    return Vertex{Element{id % n}, id / n};
  }

  std::vector<Vertex> out_neighbors(Vertex v) const;
  std::vector<Vertex> in_neighbors(Vertex v) const;

  // Arc list preceded by a one-line JSON header {group, m, vertices, arcs}.
  std::string export_arcs() const;

 private:
  Group group_;
  ConnectionTable table_;
  Digraph graph_;
};

// Arcs (g_i, (t g)_j) for every t in T(i,j).
MCayleyDigraph build_mcayley(const Group& group, const ConnectionTable& table);

// x_i -> (x g)_i on G x Z_m.
Permutation right_translation(const Group& group, std::size_t m, Element g);

}  // namespace omsr
