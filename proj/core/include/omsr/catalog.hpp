#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "omsr/group.hpp"

namespace omsr {

struct CatalogEntry {
  Group group;
  GeneratingPair pair;
};

// Families:
//   cyclic n                 Z_n, a = generator
//   abelian n1 n2            Z_n1 x Z_n2, a = (1,0), b = (0,1)
//   elementary_abelian_2 t   Z_2^t for t in {1,2}
//   dihedral n               symmetries of the n-gon, order 2n
//   dicyclic n               <a,x | a^2n, x^2 = a^n, x a x^-1 = a^-1>, order 4n
//   quaternion               Q8
//   symmetric n, alternating n   for n <= 5
// Throws UnknownFamily, TooLarge or InvalidArgument.
CatalogEntry catalog_group(std::string_view name, std::span<const long long> params,
                           std::size_t order_cap = kDefaultOrderCap);

// Groups generated by at most two elements with order <= max_order, one per
// isomorphism class, ordered by (order, label). The listing is complete for
// orders up to kCatalogCompleteOrder; larger orders only contain the named
// families above.
inline constexpr std::size_t kCatalogCompleteOrder = 15;
std::vector<CatalogEntry> two_generated_groups_up_to(std::size_t max_order);

}  // namespace omsr
