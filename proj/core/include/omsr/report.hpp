#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "omsr/autsearch.hpp"
#include "omsr/digraph.hpp"
#include "omsr/group.hpp"
#include "omsr/mcayley.hpp"

namespace omsr {

// Summary of an exhaustive enumeration, attached to non-existence verdicts.
struct SweepSummary {
  std::uint64_t tables_enumerated = 0;  // row/column-constrained families
  std::uint64_t oriented_count = 0;     // of those, oriented (each one built and searched)
  std::uint64_t witness_count = 0;
  std::uint64_t min_aut_order_seen = 0;
  std::uint64_t max_aut_order_seen = 0;
  bool complete = true;  // false if the sweep stopped at its first witness
};

struct VerificationReport {
  std::string group_label;
  std::size_t m = 0;
  std::string construction_kind;
  std::size_t valency = 2;
  bool oriented = false;
  bool regular = false;  // in- and out-valency equal `valency` everywhere
  bool connected = false;
  std::uint64_t aut_order = 0;
  std::uint64_t group_order = 0;
  std::uint64_t stabilizer_order = 0;  // of vertex 1_0
  std::size_t orbit_count = 0;
  bool translations_in_aut = false;  // R(G) <= Aut checked generator by generator
  bool omsr = false;
  double runtime_ms = 0.0;
  std::optional<SweepSummary> certificate;

  std::string to_json() const;
};

// Oriented, `valency`-regular and |Aut| = |G|. The digraph must live on
// G x Z_m with the canonical numbering; throws Error{BlockMismatch} otherwise.
VerificationReport is_omsr(const Digraph& g, const Group& group, std::size_t m,
                           std::size_t valency = 2, const AutOptions& options = {});
VerificationReport is_omsr(const MCayleyDigraph& g, std::size_t valency = 2,
                           const AutOptions& options = {});

}  // namespace omsr
