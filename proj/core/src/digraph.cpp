#include "omsr/digraph.hpp"

#include <algorithm>

#include "omsr/error.hpp"

namespace omsr {

Digraph::Digraph(std::size_t vertex_count, std::span<const Arc> arcs)
    : out_(vertex_count), in_(vertex_count) {
  for (const auto& [u, v] : arcs) {
    if (u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorKind::InvalidArgument, "arc endpoint outside the vertex range");
    }
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  arc_count_ = 0;
  for (auto& list : out_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    arc_count_ += list.size();
  }
  for (auto& list : in_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

bool Digraph::has_arc(VertexId u, VertexId v) const {
  const auto& list = out_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (VertexId u = 0; u < out_.size(); ++u) {
    for (auto v : out_[u]) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

bool is_oriented(const Digraph& g) {
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (auto v : g.out_neighbors(u)) {
      if (v == u || g.has_arc(v, u)) {
        return false;
      }
    }
  }
  return true;
}

bool is_k_regular(const Digraph& g, std::size_t k) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.out_neighbors(v).size() != k || g.in_neighbors(v).size() != k) {
      return false;
    }
  }
  return true;
}

namespace {

template <typename Next>
std::size_t reach_count(std::size_t n, VertexId start, Next next) {
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : next(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count;
}

}  // namespace

bool is_strongly_connected(const Digraph& g) {
  const auto n = g.vertex_count();
  if (n == 0) {
    return true;
  }
  return reach_count(n, 0, [&](VertexId v) { return g.out_neighbors(v); }) == n &&
         reach_count(n, 0, [&](VertexId v) { return g.in_neighbors(v); }) == n;
}

bool is_weakly_connected(const Digraph& g) {
  const auto n = g.vertex_count();
  if (n == 0) {
    return true;
  }
  std::vector<VertexId> buffer;
  return reach_count(n, 0, [&](VertexId v) {
           buffer.assign(g.out_neighbors(v).begin(), g.out_neighbors(v).end());
           buffer.insert(buffer.end(), g.in_neighbors(v).begin(), g.in_neighbors(v).end());
           return std::span<const VertexId>(buffer);
         }) == n;
}

std::vector<VertexId> distance2_out_set(const Digraph& g, VertexId v) {
  std::vector<VertexId> out;
  for (auto w : g.out_neighbors(v)) {
    for (auto x : g.out_neighbors(w)) {
      out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexId> out_ball2(const Digraph& g, VertexId v) {
  std::vector<VertexId> out{v};
  for (auto w : g.out_neighbors(v)) {
    out.push_back(w);
  }
  const auto second = distance2_out_set(g, v);
  out.insert(out.end(), second.begin(), second.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

InducedSubdigraph induced_subdigraph(const Digraph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> labels(vertices.begin(), vertices.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<Arc> arcs;
  for (VertexId i = 0; i < labels.size(); ++i) {
    if (labels[i] >= g.vertex_count()) {
      throw Error(ErrorKind::InvalidArgument, "vertex outside the digraph");
    }
    for (auto w : g.out_neighbors(labels[i])) {
      auto it = std::lower_bound(labels.begin(), labels.end(), w);
      if (it != labels.end() && *it == w) {
        arcs.emplace_back(i, static_cast<VertexId>(it - labels.begin()));
      }
    }
  }
  return {Digraph(labels.size(), arcs), std::move(labels)};
}

bool is_automorphism(const Digraph& g, const Permutation& sigma) {
  if (sigma.degree() != g.vertex_count()) {
    return false;
  }
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const auto su = sigma(u);
    if (g.out_neighbors(u).size() != g.out_neighbors(su).size()) {
      return false;
    }
    for (auto v : g.out_neighbors(u)) {
      if (!g.has_arc(su, sigma(v))) {
        return false;
      }
    }
  }
  return true;
}

Digraph relabel(const Digraph& g, const Permutation& pi) {
  auto arcs = g.arcs();
  for (auto& [u, v] : arcs) {
    u = pi(u);
    v = pi(v);
  }
  return Digraph(g.vertex_count(), arcs);
}

}  // namespace omsr
