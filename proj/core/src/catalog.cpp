#include "omsr/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "omsr/error.hpp"

namespace omsr {
namespace {

using Perm = std::vector<std::uint32_t>;

void check_cap(std::size_t order, std::size_t cap, std::string_view name) {
  if (order > cap) {
    throw Error(ErrorKind::TooLarge, std::string(name) + " has order " + std::to_string(order) +
                                         " above the cap of " + std::to_string(cap));
  }
}

long long param(std::span<const long long> params, std::size_t i, std::string_view name) {
  if (i >= params.size()) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(name) + " expects " + std::to_string(i + 1) + " parameter(s)");
  }
  return params[i];
}

CatalogEntry cyclic(long long n, std::size_t cap) {
  if (n < 1) {
    throw Error(ErrorKind::InvalidArgument, "cyclic order must be positive");
  }
  check_cap(static_cast<std::size_t>(n), cap, "cyclic");
  const auto sz = static_cast<std::size_t>(n);
  std::vector<std::vector<std::uint32_t>> table(sz, std::vector<std::uint32_t>(sz));
  for (std::size_t x = 0; x < sz; ++x) {
    for (std::size_t y = 0; y < sz; ++y) {
      table[x][y] = static_cast<std::uint32_t>((x + y) % sz);
    }
  }
  auto group = group_from_cayley_table(table, "Z" + std::to_string(n));
  return {group, GeneratingPair{Element{sz > 1 ? 1U : 0U}, std::nullopt}};
}

CatalogEntry abelian(long long n1, long long n2, std::size_t cap) {
  if (n1 < 1 || n2 < 1) {
    throw Error(ErrorKind::InvalidArgument, "abelian factors must be positive");
  }
  const auto a = static_cast<std::size_t>(n1);
  const auto b = static_cast<std::size_t>(n2);
  check_cap(a * b, cap, "abelian");
  const std::size_t n = a * b;
  // (x, y) -> x * b + y
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t x = (u / b + v / b) % a;
      const std::size_t y = (u % b + v % b) % b;
      table[u][v] = static_cast<std::uint32_t>(x * b + y);
    }
  }
  std::string label = (n1 == 2 && n2 == 2)
                          ? std::string("Z2^2")
                          : "Z" + std::to_string(n1) + "xZ" + std::to_string(n2);
  auto group = group_from_cayley_table(table, label);
  const Element ga{static_cast<std::uint32_t>(a > 1 ? b : 0)};
  const Element gb{static_cast<std::uint32_t>(b > 1 ? 1 : 0)};
  return {group, GeneratingPair{ga, gb}};
}

CatalogEntry from_perms(const std::vector<Perm>& perms, std::string label, std::size_t cap) {
  auto [group, images] = group_from_permutation_generators(perms, std::move(label), cap);
  if (images.empty()) {
    return {group, GeneratingPair{kIdentity, std::nullopt}};
  }
  if (images.size() == 1) {
    return {group, GeneratingPair{images[0], std::nullopt}};
  }
  return {group, GeneratingPair{images[0], images[1]}};
}

Perm rotation(std::size_t n, std::size_t start = 0) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0U);
  for (std::size_t i = start; i < n; ++i) {
    p[i] = static_cast<std::uint32_t>(i + 1 < n ? i + 1 : start);
  }
  return p;
}

Perm cycle3(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0U);
  p[0] = 1;
  p[1] = 2;
  p[2] = 0;
  return p;
}

CatalogEntry dihedral(long long n, std::size_t cap) {
  if (n < 3) {
    throw Error(ErrorKind::InvalidArgument, "dihedral needs n >= 3");
  }
  check_cap(2 * static_cast<std::size_t>(n), cap, "dihedral");
  const auto sz = static_cast<std::size_t>(n);
  Perm reflect(sz);
  for (std::size_t i = 0; i < sz; ++i) {
    reflect[i] = static_cast<std::uint32_t>((sz - i) % sz);
  }
  return from_perms({rotation(sz), reflect}, "D" + std::to_string(n), cap);
}

CatalogEntry dicyclic(long long n, std::size_t cap) {
  if (n < 2) {
    throw Error(ErrorKind::InvalidArgument, "dicyclic needs n >= 2");
  }
  const auto half = static_cast<std::size_t>(2 * n);  // order of a
  const std::size_t order = 2 * half;
  check_cap(order, cap, "dicyclic");
  // a^k x^e -> k + half * e
  std::vector<std::vector<std::uint32_t>> table(order, std::vector<std::uint32_t>(order));
  for (std::size_t u = 0; u < order; ++u) {
    for (std::size_t v = 0; v < order; ++v) {
      const std::size_t k = u % half, e = u / half;
      const std::size_t l = v % half, f = v / half;
      std::size_t power;
      std::size_t xs;
      if (e == 0) {
        power = (k + l) % half;
        xs = f;
      } else if (f == 0) {
        power = (k + half - l) % half;
        xs = 1;
      } else {
        // a^k x a^l x = a^(k-l) x^2 = a^(k-l+n)
        power = (k + half - l + static_cast<std::size_t>(n)) % half;
        xs = 0;
      }
      table[u][v] = static_cast<std::uint32_t>(power + half * xs);
    }
  }
  std::string label = n == 2 ? "Q8" : "Dic" + std::to_string(n);
  auto group = group_from_cayley_table(table, label);
  return {group, GeneratingPair{Element{1}, Element{static_cast<std::uint32_t>(half)}}};
}

CatalogEntry symmetric(long long n, std::size_t cap) {
  if (n < 1 || n > 5) {
    throw Error(ErrorKind::InvalidArgument, "symmetric supports 1 <= n <= 5");
  }
  const auto sz = static_cast<std::size_t>(n);
  const std::string label = "S" + std::to_string(n);
  if (sz == 1) {
    return from_perms({}, label, cap);
  }
  Perm swap01(sz);
  std::iota(swap01.begin(), swap01.end(), 0U);
  std::swap(swap01[0], swap01[1]);
  if (sz == 2) {
    return from_perms({swap01}, label, cap);
  }
  return from_perms({rotation(sz), swap01}, label, cap);
}

CatalogEntry alternating(long long n, std::size_t cap) {
  if (n < 1 || n > 5) {
    throw Error(ErrorKind::InvalidArgument, "alternating supports 1 <= n <= 5");
  }
  const auto sz = static_cast<std::size_t>(n);
  const std::string label = "A" + std::to_string(n);
  if (sz <= 2) {
    return from_perms({}, label, cap);
  }
  if (sz == 3) {
    return from_perms({cycle3(sz)}, label, cap);
  }
  // An n-cycle is even for odd n; for even n use the (n-1)-cycle fixing 0.
  Perm big = sz % 2 == 1 ? rotation(sz) : rotation(sz, 1);
  return from_perms({big, cycle3(sz)}, label, cap);
}

}  // namespace

CatalogEntry catalog_group(std::string_view name, std::span<const long long> params,
                           std::size_t order_cap) {
  if (name == "cyclic") {
    return cyclic(param(params, 0, name), order_cap);
  }
  if (name == "abelian" || name == "product") {
    return abelian(param(params, 0, name), param(params, 1, name), order_cap);
  }
  if (name == "elementary_abelian_2") {
    const auto t = param(params, 0, name);
    if (t == 0) {
      return cyclic(1, order_cap);
    }
    if (t == 1) {
      return cyclic(2, order_cap);
    }
    if (t == 2) {
      return abelian(2, 2, order_cap);
    }
    throw Error(ErrorKind::InvalidArgument, "Z2^t with t > 2 needs more than two generators");
  }
  if (name == "dihedral") {
    return dihedral(param(params, 0, name), order_cap);
  }
  if (name == "dicyclic") {
    return dicyclic(param(params, 0, name), order_cap);
  }
  if (name == "quaternion") {
    return dicyclic(2, order_cap);
  }
  if (name == "symmetric") {
    return symmetric(param(params, 0, name), order_cap);
  }
  if (name == "alternating") {
    return alternating(param(params, 0, name), order_cap);
  }
  throw Error(ErrorKind::UnknownFamily, "unknown group family '" + std::string(name) + "'");
}

std::vector<CatalogEntry> two_generated_groups_up_to(std::size_t max_order) {
  std::vector<CatalogEntry> out;
  const std::size_t cap = std::max(max_order, kDefaultOrderCap);
  for (std::size_t n = 1; n <= max_order; ++n) {
    const auto ln = static_cast<long long>(n);
    std::vector<CatalogEntry> same;
    same.push_back(cyclic(ln, cap));
    // Non-cyclic abelian groups with two invariant factors d | n/d.
    for (std::size_t d = 2; d * d <= n; ++d) {
      if (n % d == 0 && (n / d) % d == 0) {
        same.push_back(abelian(static_cast<long long>(d), static_cast<long long>(n / d), cap));
      }
    }
    if (n % 2 == 0 && n / 2 >= 3) {
      if (n == 6) {
        same.push_back(symmetric(3, cap));
      } else {
        same.push_back(dihedral(ln / 2, cap));
      }
    }
    if (n % 4 == 0 && n / 4 >= 2) {
      same.push_back(dicyclic(ln / 4, cap));
    }
    if (n == 12) {
      same.push_back(alternating(4, cap));
    }
    if (n == 24) {
      same.push_back(symmetric(4, cap));
    }
    if (n == 60) {
      same.push_back(alternating(5, cap));
    }
    std::sort(same.begin(), same.end(), [](const CatalogEntry& x, const CatalogEntry& y) {
      return x.group.label() < y.group.label();
    });
    for (auto& e : same) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace omsr
