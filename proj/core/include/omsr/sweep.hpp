#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "omsr/autsearch.hpp"
#include "omsr/group.hpp"
#include "omsr/mcayley.hpp"
#include "omsr/report.hpp"

namespace omsr {

enum class SweepVerdict { Exists, NotExists };

struct SweepOptions {
  std::size_t valency = 2;
  bool stop_at_first_witness = false;
  std::size_t max_stored_witnesses = 64;  // witness_count is always exact
  // Feasibility guard: |G|*m <= guard_product, or |G| = 1 and m <= guard_trivial_m.
  bool enforce_guard = true;
  std::size_t guard_product = 16;
  std::size_t guard_trivial_m = 10;
  AutOptions aut;
};

struct SweepWitness {
  ConnectionTable table;
  bool connected = false;
  std::uint64_t aut_order = 0;
};

struct SweepResult {
  std::string group_label;
  std::size_t m = 0;
  std::size_t valency = 0;
  std::uint64_t tables_enumerated = 0;
  std::uint64_t oriented_count = 0;
  std::uint64_t witness_count = 0;
  std::uint64_t min_aut_order_seen = 0;
  std::uint64_t max_aut_order_seen = 0;
  bool complete = true;
  std::vector<SweepWitness> witnesses;  // sorted by serialized table text
  SweepVerdict verdict = SweepVerdict::NotExists;

  SweepSummary summary() const;
  std::string to_json(bool include_witnesses) const;
};

std::string_view to_string(SweepVerdict v);

bool sweep_is_feasible(std::size_t group_order, std::size_t m, const SweepOptions& options);

// Enumerates every oriented connection table whose rows and columns each hold
// `valency` elements in total, builds the digraph and keeps those with
// |Aut| = |G|. Throws Error{InfeasibleSweep} when the guard rejects (|G|, m).
SweepResult exhaustive_sweep(const Group& group, std::size_t m, const SweepOptions& options = {});

// Number of families (T(i,j)) of subsets of a group of order n with every
// row and column sum equal to `valency`, loops and digons included.
std::uint64_t count_constrained_families(std::size_t group_order, std::size_t m,
                                         std::size_t valency);

struct RandomSearchOptions {
  std::size_t valency = 2;
  std::uint64_t attempts = 20000;       // tables checked before giving up
  std::uint64_t nodes_per_attempt = 20000;
  std::uint64_t seed = 1;
  AutOptions aut;
};

// Randomised restarts of the same constrained enumeration; returns the first
// table with |Aut| = |G|, or nullopt when the attempt budget runs out.
std::optional<ConnectionTable> random_witness_search(const Group& group, std::size_t m,
                                                     const RandomSearchOptions& options = {});

}  // namespace omsr
