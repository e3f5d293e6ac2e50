#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omsr/catalog.hpp"
#include "omsr/constructions.hpp"
#include "omsr/report.hpp"

namespace omsr {

// Process exit codes shared by the library and the CLI.
enum ExitCode : int {
  kExitVerified = 0,  // OmSR verified, or non-existence certified
  kExitFailed = 1,
  kExitInputError = 2,
  kExitBudget = 3,
};

struct VerifyOutcome {
  VerificationReport report;
  std::optional<ExceptionVerdict> exception;
  std::optional<Witness> witness;
  int exit_code = kExitFailed;

  std::string to_json() const;
  std::string to_text() const;
};

// construct_omsr followed by classification of the result. Exceptions get a
// report with omsr = false and the sweep certificate attached.
VerifyOutcome verify_instance(const CatalogEntry& entry, std::size_t m,
                              const ConstructOptions& options = {});

struct TheoremRow {
  std::string group_label;
  std::size_t group_order = 0;
  std::size_t m = 0;
  bool exists = false;
  std::string method;  // recipe name, or "exhaustive_sweep" for exceptions
  std::uint64_t aut_order = 0;
  bool connected = false;
  bool expected_exception = false;
  bool agrees = false;
  std::optional<SweepSummary> certificate;
};

struct TheoremTable {
  std::size_t max_order = 0;
  std::size_t max_m = 0;
  std::vector<TheoremRow> rows;

  bool all_agree() const;
  // (label, m) of every NOT_EXISTS row, in row order.
  std::vector<std::pair<std::string, std::size_t>> exceptions() const;
  std::string to_json() const;
  std::string to_text() const;
};

// The exception list of the classification, keyed by catalog label:
// Z1 for m <= 6, Z2 and Z2^2 for m = 2.
bool theorem_lists_exception(std::string_view label, std::size_t m);

// One row per catalogued group of order <= max_order generated by at most two
// elements and per 2 <= m <= max_m.
TheoremTable reproduce_theorem(std::size_t max_order, std::size_t max_m,
                               const ConstructOptions& options = {});

// Z2, Z3, Z5, Z7 or A5 (A5 only for m <= 3). Throws UnknownFamily or
// InvalidArgument.
VerifyOutcome simple_group_check(std::string_view name, std::size_t m,
                                 const ConstructOptions& options = {});

}  // namespace omsr
