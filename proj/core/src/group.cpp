#include "omsr/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "omsr/error.hpp"

namespace omsr {
namespace {

std::string triple_text(std::size_t x, std::size_t y, std::size_t z) {
  std::ostringstream os;
  os << "(" << x << ", " << y << ", " << z << ")";
  return os.str();
}

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

Element Group::pow(Element x, long long k) const {
  const auto n = static_cast<long long>(order());
  k %= n;
  if (k < 0) {
    k += n;
  }
  Element result = kIdentity;
  Element base = x;
  while (k > 0) {
    if (k & 1) {
      result = mul(result, base);
    }
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<std::vector<std::uint32_t>> Group::table_rows() const {
  const auto n = order();
  std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
  for (std::size_t x = 0; x < n; ++x) {
    std::copy_n(data_->mult.begin() + static_cast<std::ptrdiff_t>(x * n), n, rows[x].begin());
  }
  return rows;
}

Group Group::with_label(std::string label) const {
  auto copy = std::make_shared<Data>(*data_);
  copy->label = std::move(label);
  return Group(std::move(copy));
}

Group group_from_cayley_table(const std::vector<std::vector<std::uint32_t>>& table,
                              std::string label) {
  const std::size_t n = table.size();
  if (n == 0) {
    throw Error(ErrorKind::NotAGroup, "empty table");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n) {
      throw Error(ErrorKind::NotAGroup, "row " + std::to_string(x) + " has " +
                                            std::to_string(table[x].size()) + " entries, expected " +
                                            std::to_string(n));
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (table[x][y] >= n) {
        throw Error(ErrorKind::NotAGroup, "entry at (" + std::to_string(x) + ", " +
                                              std::to_string(y) + ") out of range");
      }
    }
  }

  // Latin square.
  std::vector<char> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < n; ++y) {
      if (seen[table[x][y]]++) {
        throw Error(ErrorKind::NotAGroup, "row " + std::to_string(x) + " repeats element " +
                                              std::to_string(table[x][y]));
      }
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (seen[table[x][y]]++) {
        throw Error(ErrorKind::NotAGroup, "column " + std::to_string(y) + " repeats element " +
                                              std::to_string(table[x][y]));
      }
    }
  }

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = table[e][x] == x && table[x][e] == x;
    }
    if (ok) {
      identity = e;
    }
  }
  if (!identity) {
    throw Error(ErrorKind::NotAGroup, "no two-sided identity element");
  }

  // Swap the identity into slot 0.
  std::vector<std::uint32_t> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0U);
  std::swap(relabel[0], relabel[*identity]);

  Group::Data data;
  data.order = n;
  data.label = std::move(label);
  data.mult.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      data.mult[relabel[x] * n + relabel[y]] = relabel[table[x][y]];
    }
  }
  const auto& mult = data.mult;
  auto prod = [&](std::size_t x, std::size_t y) { return mult[x * n + y]; };

  data.inv.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    // Latin rows guarantee exactly one right inverse.
    std::size_t y = 0;
    while (prod(x, y) != 0) {
      ++y;
    }
    if (prod(y, x) != 0) {
      throw Error(ErrorKind::NotAGroup,
                  "element " + std::to_string(x) + " has no two-sided inverse");
    }
    data.inv[x] = static_cast<std::uint32_t>(y);
  }

  auto check = [&](std::size_t x, std::size_t y, std::size_t z) {
    if (prod(prod(x, y), z) != prod(x, prod(y, z))) {
      throw Error(ErrorKind::NotAGroup, "associativity fails for triple " + triple_text(x, y, z));
    }
  };
  if (n <= kExhaustiveAssociativityLimit) {
    data.assoc = AssociativityCheck::Exhaustive;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          check(x, y, z);
        }
      }
    }
  } else {
    data.assoc = AssociativityCheck::Sampled;
    std::mt19937_64 rng(0x6f6d7372ULL ^ n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < 10 * n * n; ++s) {
      check(pick(rng), pick(rng), pick(rng));
    }
  }

  return Group(std::make_shared<const Group::Data>(std::move(data)));
}

std::pair<Group, std::vector<Element>> group_from_permutation_generators(
    const std::vector<std::vector<std::uint32_t>>& perms, std::string label,
    std::size_t order_cap) {
  std::size_t degree = 0;
  if (!perms.empty()) {
    degree = perms.front().size();
  }
  for (const auto& p : perms) {
    if (p.size() != degree) {
      throw Error(ErrorKind::InvalidArgument, "permutations act on different ground sets");
    }
    std::vector<char> hit(degree, 0);
    for (auto x : p) {
      if (x >= degree || hit[x]++) {
        throw Error(ErrorKind::InvalidArgument, "input is not a bijection");
      }
    }
  }

  using Perm = std::vector<std::uint32_t>;
  auto compose = [](const Perm& first, const Perm& second) {
    Perm r(first.size());
    for (std::size_t x = 0; x < first.size(); ++x) {
      r[x] = second[first[x]];
    }
    return r;
  };

  Perm identity(degree);
  std::iota(identity.begin(), identity.end(), 0U);
  std::vector<Perm> elements{identity};
  std::unordered_map<Perm, std::uint32_t, VectorHash> index{{identity, 0}};
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    for (const auto& g : perms) {
      Perm next = compose(elements[cur], g);
      if (index.contains(next)) {
        continue;
      }
      if (elements.size() >= order_cap) {
        throw Error(ErrorKind::TooLarge,
                    "closure exceeds the order cap of " + std::to_string(order_cap));
      }
      index.emplace(next, static_cast<std::uint32_t>(elements.size()));
      queue.push_back(static_cast<std::uint32_t>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  const std::size_t n = elements.size();
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      table[x][y] = index.at(compose(elements[x], elements[y]));
    }
  }
  std::vector<Element> images;
  images.reserve(perms.size());
  for (const auto& p : perms) {
    images.push_back(Element{index.at(p)});
  }
  return {group_from_cayley_table(table, std::move(label)), std::move(images)};
}

std::size_t element_order(const Group& group, Element g) {
  std::size_t k = 1;
  Element x = g;
  while (x != kIdentity) {
    x = group.mul(x, g);
    ++k;
  }
  return k;
}

bool is_abelian(const Group& group) {
  const auto n = group.order();
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = x + 1; y < n; ++y) {
      if (group.mul(Element{x}, Element{y}) != group.mul(Element{y}, Element{x})) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Element> generated_subgroup(const Group& group, std::span<const Element> gens) {
  std::vector<Element> closure_gens;
  for (auto g : gens) {
    closure_gens.push_back(g);
    closure_gens.push_back(group.inv(g));
  }
  std::vector<char> in(group.order(), 0);
  std::vector<Element> members{kIdentity};
  in[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto g : closure_gens) {
      const Element next = group.mul(members[head], g);
      if (!in[next.index]) {
        in[next.index] = 1;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool generates(const Group& group, std::span<const Element> gens) {
  return generated_subgroup(group, gens).size() == group.order();
}

std::variant<NormalizedPair, AllInvolutions> normalize_generating_pair(const Group& group,
                                                                       Element a, Element b) {
  const Element pair[] = {a, b};
  if (!generates(group, pair)) {
    throw Error(ErrorKind::NotGenerating, "the pair does not generate " + group.label());
  }
  const Element ab = group.mul(a, b);
  const Element ba = group.mul(b, a);
  const NormalizedPair candidates[] = {{a, b}, {b, a}, {ab, b}, {ab, a}, {ba, b}, {ba, a}};
  for (const auto& c : candidates) {
    if (element_order(group, c.a) >= 3) {
      return c;
    }
  }
  return AllInvolutions{};
}

std::optional<Element> find_cyclic_generator(const Group& group) {
  for (std::uint32_t x = 0; x < group.order(); ++x) {
    if (element_order(group, Element{x}) == group.order()) {
      return Element{x};
    }
  }
  return std::nullopt;
}

}  // namespace omsr
