#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "omsr/group.hpp"
#include "omsr/mcayley.hpp"
#include "omsr/report.hpp"
#include "omsr/sweep.hpp"

namespace omsr {

enum class RecipeKind { Cyclic, Abelian2Gen, NonAbelian2Gen, SearchWitness };

std::string_view to_string(RecipeKind kind);
// "cyclic", "abelian", "nonabelian"; nullopt for "auto". Throws InvalidArgument.
std::optional<RecipeKind> parse_recipe(std::string_view text);

struct ConstructionRecipe {
  RecipeKind kind = RecipeKind::Cyclic;
  GeneratingPair pair;
  std::size_t m = 0;
};

// Two-block-diagonal "cycle of blocks" tables of valency two. All three need
// m >= 2 and o(a) >= 3.
//
// cyclic:     T(0,0) = {a}, T(i,i) = {a^-1} (i != 0), T(m-1,0) = {a}, T(i,i+1) = {1}
ConnectionTable cyclic_connection_table(const Group& group, Element a, std::size_t m);
// abelian:    T(0,0) = {a}, T(i,i) = {ab} (i != 0), T(m-1,0) = {b}, T(i,i+1) = {1}
// Also requires o(ab) >= 3, otherwise T(1,1) = {ab} closes a digon.
ConnectionTable abelian_connection_table(const Group& group, Element a, Element b,
                                         std::size_t m);
// nonabelian: T(i,i) = {a}, T(m-1,0) = {b}, T(i,i+1) = {1}
ConnectionTable nonabelian_connection_table(const Group& group, Element a, Element b,
                                            std::size_t m);

struct Witness {
  ConstructionRecipe recipe;
  MCayleyDigraph digraph;
  VerificationReport report;
};

// No OmSR of valency two exists; `certificate` covers the full enumeration.
// `listed` is false when the sweep refutes an instance outside the
// classification's exception list.
struct ExceptionVerdict {
  std::string group_label;
  std::size_t m = 0;
  SweepSummary certificate;
  bool all_failed = true;
  bool listed = true;

  std::string to_json() const;
};

using ConstructionResult = std::variant<Witness, ExceptionVerdict>;

// (Z1, 2 <= m <= 6), (Z2, 2) and (Z2^2, 2), recognised structurally.
bool is_listed_exception(const Group& group, std::size_t m);

// Z1, Z2 and Z2^2: the groups whose witnesses come from search.
bool needs_search_witness(const Group& group);

// Flat directory of "<label>_m<m>.table" files in ConnectionTable text form.
struct WitnessCache {
  std::filesystem::path directory;
  bool regenerate = false;

  std::filesystem::path path_for(const std::string& label, std::size_t m) const;
  std::optional<ConnectionTable> load(const std::string& label, std::size_t m,
                                      std::size_t group_order) const;
  void store(const std::string& label, std::size_t m, const ConnectionTable& table) const;
};

struct ConstructOptions {
  std::optional<RecipeKind> forced_recipe;
  const WitnessCache* cache = nullptr;
  SweepOptions sweep;
  RandomSearchOptions random;
  AutOptions aut;
};

// Exceptional (m, G) get an ExceptionVerdict backed by a full sweep; Z1, Z2
// and Z2^2 otherwise get a searched witness (or an unlisted ExceptionVerdict
// when a complete sweep finds none); cyclic groups of order >= 3 use
// the cyclic table, other abelian groups the abelian table on a normalised
// pair, non-abelian groups the non-abelian table. Witness reports are
// computed, never assumed. Throws NotGenerating, SearchBudgetExceeded or the
// recipe errors when a recipe is forced.
ConstructionResult construct_omsr(const Group& group, const GeneratingPair& pair, std::size_t m,
                                  const ConstructOptions& options = {});

}  // namespace omsr
