#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace omsr {

inline constexpr std::size_t kDefaultOrderCap = 2000;
inline constexpr std::size_t kExhaustiveAssociativityLimit = 512;

// Element of a finite group, identified by its row in the Cayley table.
// Index 0 is always the identity.
struct Element {
  std::uint32_t index = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

inline constexpr Element kIdentity{0};

enum class AssociativityCheck { Exhaustive, Sampled };

// Finite group given by a validated multiplication table. Immutable; copies
// share the underlying table.
class Group {
 public:
  std::size_t order() const noexcept { return data_->order; }
  const std::string& label() const noexcept { return data_->label; }
  AssociativityCheck associativity_check() const noexcept { return data_->assoc; }

  Element mul(Element x, Element y) const noexcept {
    return Element{data_->mult[static_cast<std::size_t>(x.index) * data_->order + y.index]};
  }
  Element inv(Element x) const noexcept { return Element{data_->inv[x.index]}; }
  Element pow(Element x, long long k) const;

  bool contains(Element x) const noexcept { return x.index < data_->order; }

  // Row-major n*n table; entry [x*n+y] is the index of x*y.
  std::span<const std::uint32_t> table() const noexcept { return data_->mult; }
  std::vector<std::vector<std::uint32_t>> table_rows() const;

  Group with_label(std::string label) const;

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<std::uint32_t> mult;
    std::vector<std::uint32_t> inv;
    std::string label;
    AssociativityCheck assoc = AssociativityCheck::Exhaustive;
  };

  explicit Group(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;

  friend Group group_from_cayley_table(const std::vector<std::vector<std::uint32_t>>& table,
                                       std::string label);
};

// A generating set of at most two elements; `b` is absent for cyclic input.
struct GeneratingPair {
  Element a;
  std::optional<Element> b;
};

// Validates `table` (entries in [0,n)) and returns the group. When the
// identity is not at index 0 it is swapped with element 0.
// Throws Error{NotAGroup} naming the first failing element or triple.
Group group_from_cayley_table(const std::vector<std::vector<std::uint32_t>>& table,
                              std::string label = {});

// Closure of the given permutations of [0,k) under composition (x applied
// through the left factor first). The identity is element 0, the inputs'
// images are returned in order.
std::pair<Group, std::vector<Element>> group_from_permutation_generators(
    const std::vector<std::vector<std::uint32_t>>& perms, std::string label = {},
    std::size_t order_cap = kDefaultOrderCap);

std::size_t element_order(const Group& group, Element g);

bool is_abelian(const Group& group);

// Closure of S together with the inverses of S.
std::vector<Element> generated_subgroup(const Group& group, std::span<const Element> gens);
bool generates(const Group& group, std::span<const Element> gens);

// Returned by normalize_generating_pair when a, b, ab and ba are all
// involutions or trivial, which only happens for Z1, Z2 and Z2^2.
struct AllInvolutions {};

struct NormalizedPair {
  Element a;
  Element b;
};

// Picks the first pair among (a,b), (b,a), (ab,b), (ab,a), (ba,b), (ba,a)
// whose first entry has order at least 3.
std::variant<NormalizedPair, AllInvolutions> normalize_generating_pair(const Group& group,
                                                                       Element a, Element b);

// Cyclic iff some element has order |G|; returns that element.
std::optional<Element> find_cyclic_generator(const Group& group);

}  // namespace omsr
