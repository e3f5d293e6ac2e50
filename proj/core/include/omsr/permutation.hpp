#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace omsr {

// Bijection of {0, ..., degree-1}. Composition follows the right-action
// convention: (x)(p * q) = q(p(x)), i.e. the left factor is applied first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation from_cycles(const std::vector<std::vector<std::uint32_t>>& cycles,
                                 std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const noexcept { return images_[x]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  std::optional<std::uint32_t> first_moved_point() const noexcept;
  Permutation inverse() const;
  Permutation then(const Permutation& next) const;

  // "(0 1 2)(3 4)"; the identity prints as "()".
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& first, const Permutation& second) {
    return first.then(second);
  }
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// Parses cycle notation such as "(0 1 2)(3 4)" or "()" into its cycles.
// `line` is used for error locations; throws Error{Parse}.
std::vector<std::vector<std::uint32_t>> parse_cycle_notation(std::string_view text, int line = 1);
Permutation parse_permutation(std::string_view text, std::size_t degree);

// Base and strong generating set built by deterministic Schreier-Sims. Base
// points start with `base_prefix` and are then extended by the first point
// moved by each new sifting residue.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                  std::span<const std::uint32_t> base_prefix = {});

  std::size_t depth() const noexcept { return levels_.size(); }
  std::uint32_t base_point(std::size_t level) const { return levels_[level].base; }
  std::span<const std::uint32_t> basic_orbit(std::size_t level) const {
    return levels_[level].orbit;
  }
  // Strong generators of the pointwise stabilizer of base points [0, level).
  std::vector<Permutation> strong_generators(std::size_t level) const;

  // Exact order; throws Error{TooLarge} on 64-bit overflow.
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;

 private:
  struct Level {
    std::uint32_t base = 0;
    std::vector<Permutation> own;  // generators first appearing at this level
    std::vector<std::uint32_t> orbit;
    std::vector<int> slot;  // point -> index into transversal, -1 if outside
    std::vector<Permutation> transversal;
    std::vector<Permutation> transversal_inv;
  };

  void rebuild_orbit(std::size_t level);
  // Returns the residue and the level where sifting stopped.
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t start) const;
  void add_level(std::uint32_t base);

  std::size_t degree_;
  std::vector<Level> levels_;
};

inline constexpr std::uint64_t kMaterializeCap = 10000;

// Group of permutations with an exact order. Elements are materialized when
// the order is at most kMaterializeCap.
class PermutationGroup {
 public:
  // Order computed from a stabilizer chain over `generators`.
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::uint64_t order() const noexcept { return order_; }
  const std::optional<std::vector<Permutation>>& elements() const noexcept { return elements_; }

  bool contains(const Permutation& p) const;
  std::vector<std::uint32_t> orbit(std::uint32_t v) const;
  // orbit id per point, ids in order of first appearance
  std::vector<std::uint32_t> orbit_ids() const;
  std::size_t orbit_count() const;

  std::string to_json() const;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabilizerChain> chain_;
  std::uint64_t order_ = 1;
  std::optional<std::vector<Permutation>> elements_;
};

// All elements generated by `generators` (breadth-first closure), or nullopt
// once more than `cap` elements appear. Sorted.
std::optional<std::vector<Permutation>> enumerate_elements(
    std::size_t degree, std::span<const Permutation> generators, std::uint64_t cap);

// Subgroup fixing v.
PermutationGroup stabilizer(const PermutationGroup& group, std::uint32_t v);

}  // namespace omsr
