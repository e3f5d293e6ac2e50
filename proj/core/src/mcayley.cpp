#include "omsr/mcayley.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "omsr/error.hpp"

namespace omsr {

ConnectionTable::ConnectionTable(std::size_t m, std::size_t group_order)
    : m_(m), n_(group_order), sets_(m * m) {
  if (m == 0) {
    throw Error(ErrorKind::InvalidArgument, "m must be positive");
  }
}

void ConnectionTable::set(std::size_t i, std::size_t j, std::vector<Element> elements) {
  if (i >= m_ || j >= m_) {
    throw Error(ErrorKind::InvalidArgument, "block index outside Z_m");
  }
  for (auto e : elements) {
    if (e.index >= n_) {
      throw Error(ErrorKind::InvalidArgument,
                  "element " + std::to_string(e.index) + " outside the group");
    }
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  sets_[i * m_ + j] = std::move(elements);
}

void ConnectionTable::add(std::size_t i, std::size_t j, Element e) {
  auto elements = at(i, j);
  elements.push_back(e);
  set(i, j, std::move(elements));
}

std::size_t ConnectionTable::row_size(std::size_t i) const {
  std::size_t total = 0;
  for (std::size_t j = 0; j < m_; ++j) {
    total += at(i, j).size();
  }
  return total;
}

std::size_t ConnectionTable::column_size(std::size_t j) const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < m_; ++i) {
    total += at(i, j).size();
  }
  return total;
}

std::size_t ConnectionTable::total_size() const {
  std::size_t total = 0;
  for (const auto& s : sets_) {
    total += s.size();
  }
  return total;
}

std::string ConnectionTable::to_text() const {
  std::ostringstream os;
  os << "m: " << m_ << '\n';
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) {
      const auto& s = at(i, j);
      if (s.empty()) {
        continue;
      }
      os << "T " << i << ' ' << j << " :";
      for (auto e : s) {
        os << ' ' << e.index;
      }
      os << '\n';
    }
  }
  return os.str();
}

namespace {

class LineScanner {
 public:
  LineScanner(std::string_view text, int line) : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }
  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  std::uint64_t number() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a non-negative integer");
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > 0xFFFFFFFFULL) {
        fail("integer too large");
      }
      ++pos_;
    }
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, what, line_, static_cast<int>(pos_) + 1);
  }
  int column() const { return static_cast<int>(pos_) + 1; }

 private:
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

ConnectionTable parse_connection_table(std::string_view text, std::size_t group_order) {
  std::optional<ConnectionTable> table;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    LineScanner scan(raw, line);
    if (scan.at_end()) {
      continue;
    }
    if (scan.accept("#")) {
      continue;
    }
    if (!table) {
      if (!scan.accept("m")) {
        scan.fail("expected 'm: <int>' header");
      }
      scan.expect(':');
      const auto m = scan.number();
      if (m == 0) {
        scan.fail("m must be positive");
      }
      if (!scan.at_end()) {
        scan.fail("trailing characters");
      }
      table.emplace(m, group_order);
      continue;
    }
    if (!scan.accept("T")) {
      scan.fail("expected 'T i j : ...'");
    }
    const int i_col = scan.column();
    const auto i = scan.number();
    const auto j = scan.number();
    if (i >= table->m() || j >= table->m()) {
      throw Error(ErrorKind::Parse, "block index outside Z_m", line, i_col);
    }
    scan.expect(':');
    std::vector<Element> elements;
    while (!scan.at_end()) {
      const int col = scan.column();
      const auto e = scan.number();
      if (e >= group_order) {
        throw Error(ErrorKind::Parse, "element index outside the group", line, col);
      }
      elements.push_back(Element{static_cast<std::uint32_t>(e)});
    }
    auto merged = table->at(i, j);
    merged.insert(merged.end(), elements.begin(), elements.end());
    table->set(i, j, std::move(merged));
  }
  if (!table) {
    throw Error(ErrorKind::Parse, "missing 'm: <int>' header", line + 1, 1);
  }
  return *table;
}

bool table_is_oriented(const Group& group, const ConnectionTable& table) {
  const auto m = table.m();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& diag = table.at(i, i);
    if (std::binary_search(diag.begin(), diag.end(), kIdentity)) {
      return false;
    }
    for (std::size_t j = i; j < m; ++j) {
      const auto& back = table.at(j, i);
      for (auto t : table.at(i, j)) {
        if (std::binary_search(back.begin(), back.end(), group.inv(t))) {
          return false;
        }
      }
    }
  }
  return true;
}

MCayleyDigraph build_mcayley(const Group& group, const ConnectionTable& table) {
  if (table.group_order() != group.order()) {
    throw Error(ErrorKind::InvalidArgument, "connection table belongs to a different group order");
  }
  const auto n = group.order();
  const auto m = table.m();
  std::vector<Arc> arcs;
  arcs.reserve(n * table.total_size());
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < m; ++j) {
      for (auto t : table.at(i, j)) {
        for (std::uint32_t g = 0; g < n; ++g) {
          const auto tg = group.mul(t, Element{g});
          arcs.emplace_back(static_cast<VertexId>(i * n + g),
                            static_cast<VertexId>(j * n + tg.index));
        }
      }
    }
  }
  Digraph graph(n * m, arcs);
  return MCayleyDigraph(group, table, std::move(graph));
}

std::vector<Vertex> MCayleyDigraph::out_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (auto w : graph_.out_neighbors(id(v))) {
    out.push_back(vertex(w));
  }
  return out;
}

std::vector<Vertex> MCayleyDigraph::in_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (auto w : graph_.in_neighbors(id(v))) {
    out.push_back(vertex(w));
  }
  return out;
}

std::string MCayleyDigraph::export_arcs() const {
  nlohmann::json header;
  header["group"] = group_.label();
  header["m"] = m();
  header["vertices"] = graph_.vertex_count();
  header["arcs"] = graph_.arc_count();
  std::ostringstream os;
  os << header.dump() << '\n';
  for (const auto& [u, v] : graph_.arcs()) {
    os << u << ' ' << v << '\n';
  }
  return os.str();
}

Permutation right_translation(const Group& group, std::size_t m, Element g) {
  const auto n = group.order();
  std::vector<std::uint32_t> images(n * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::uint32_t x = 0; x < n; ++x) {
      images[i * n + x] = static_cast<std::uint32_t>(i * n + group.mul(Element{x}, g).index);
    }
  }
  return Permutation(std::move(images));
}

}  // namespace omsr
