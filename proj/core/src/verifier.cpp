#include "omsr/verifier.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "omsr/error.hpp"

namespace omsr {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::string VerifyOutcome::to_json() const {
  nlohmann::json j = nlohmann::json::parse(report.to_json());
  j["exit_code"] = exit_code;
  j["verdict"] = exception ? "NOT_EXISTS" : (report.omsr ? "EXISTS" : "FAILED");
  if (exception) {
    j["exception"] = nlohmann::json::parse(exception->to_json());
  }
  if (witness) {
    j["table"] = witness->digraph.table().to_text();
  }
  return j.dump(2);
}

std::string VerifyOutcome::to_text() const {
  std::ostringstream out;
  out << "group " << report.group_label << " (order " << report.group_order << "), m = "
      << report.m << "\n";
  if (exception) {
    const auto& c = exception->certificate;
    out << "verdict: NOT_EXISTS (certified by exhaustive sweep)\n"
        << "  families enumerated: " << c.tables_enumerated << "\n"
        << "  oriented tables checked: " << c.oriented_count << "\n"
        << "  |Aut| range seen: " << c.min_aut_order_seen << ".." << c.max_aut_order_seen << "\n";
  } else {
    out << "construction: " << report.construction_kind << "\n"
        << "  oriented: " << std::boolalpha << report.oriented << "\n"
        << "  2-regular: " << report.regular << "\n"
        << "  strongly connected: " << report.connected << "\n"
        << "  |Aut|: " << report.aut_order << "\n"
        << "  vertex stabilizer order: " << report.stabilizer_order << "\n"
        << "  R(G) inside Aut: " << report.translations_in_aut << "\n"
        << "verdict: " << (report.omsr ? "OmSR" : "NOT an OmSR") << "\n";
  }
  out << "runtime: " << std::fixed << std::setprecision(1) << report.runtime_ms << " ms\n";
  return out.str();
}

VerifyOutcome verify_instance(const CatalogEntry& entry, std::size_t m,
                              const ConstructOptions& options) {
  const auto start = Clock::now();
  auto result = construct_omsr(entry.group, entry.pair, m, options);
  VerifyOutcome out;
  if (auto* w = std::get_if<Witness>(&result)) {
    out.report = w->report;
    out.exit_code = out.report.omsr ? kExitVerified : kExitFailed;
    out.witness = std::move(*w);
  } else {
    auto& ex = std::get<ExceptionVerdict>(result);
    VerificationReport r;
    r.group_label = entry.group.label();
    r.m = m;
    r.construction_kind = "exhaustive_sweep";
    r.group_order = entry.group.order();
    r.certificate = ex.certificate;
    out.report = r;
    out.exit_code = ex.all_failed && ex.certificate.complete ? kExitVerified : kExitFailed;
    out.exception = std::move(ex);
  }
  out.report.runtime_ms = elapsed_ms(start);
  return out;
}

bool theorem_lists_exception(std::string_view label, std::size_t m) {
  if (label == "Z1") {
    return m <= 6;
  }
  return (label == "Z2" || label == "Z2^2") && m == 2;
}

bool TheoremTable::all_agree() const {
  return std::all_of(rows.begin(), rows.end(), [](const TheoremRow& r) { return r.agrees; });
}

std::vector<std::pair<std::string, std::size_t>> TheoremTable::exceptions() const {
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const auto& r : rows) {
    if (!r.exists) {
      out.emplace_back(r.group_label, r.m);
    }
  }
  return out;
}

std::string TheoremTable::to_json() const {
  nlohmann::json j;
  j["max_order"] = max_order;
  j["max_m"] = max_m;
  j["all_agree"] = all_agree();
  auto list = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row{{"group", r.group_label},
                       {"group_order", r.group_order},
                       {"m", r.m},
                       {"verdict", r.exists ? "EXISTS" : "NOT_EXISTS"},
                       {"method", r.method},
                       {"aut_order", r.aut_order},
                       {"connected", r.connected},
                       {"expected_exception", r.expected_exception},
                       {"agrees", r.agrees}};
    if (r.certificate) {
      row["certificate"] = {{"tables_enumerated", r.certificate->tables_enumerated},
                            {"oriented_count", r.certificate->oriented_count},
                            {"witness_count", r.certificate->witness_count},
                            {"max_aut_order_seen", r.certificate->max_aut_order_seen}};
    } else {
      row["certificate"] = nullptr;
    }
    list.push_back(std::move(row));
  }
  j["rows"] = list;
  return j.dump(2);
}

std::string TheoremTable::to_text() const {
  std::ostringstream out;
  out << std::left << std::setw(10) << "group" << std::setw(4) << "m" << std::setw(12)
      << "verdict" << std::setw(18) << "method" << std::setw(8) << "|Aut|" << "agrees\n";
  for (const auto& r : rows) {
    out << std::setw(10) << r.group_label << std::setw(4) << r.m << std::setw(12)
        << (r.exists ? "EXISTS" : "NOT_EXISTS") << std::setw(18) << r.method << std::setw(8)
        << (r.exists ? std::to_string(r.aut_order) : "-") << (r.agrees ? "yes" : "NO") << "\n";
  }
  out << (all_agree() ? "all rows agree with the classification\n"
                      : "DISAGREEMENT with the classification\n");
  return out.str();
}

TheoremTable reproduce_theorem(std::size_t max_order, std::size_t max_m,
                               const ConstructOptions& options) {
  TheoremTable table{max_order, max_m, {}};
  for (const auto& entry : two_generated_groups_up_to(max_order)) {
    for (std::size_t m = 2; m <= max_m; ++m) {
      const auto outcome = verify_instance(entry, m, options);
      TheoremRow row;
      row.group_label = entry.group.label();
      row.group_order = entry.group.order();
      row.m = m;
      row.expected_exception = theorem_lists_exception(row.group_label, m);
      if (outcome.exception) {
        row.exists = false;
        row.method = "exhaustive_sweep";
        row.certificate = outcome.exception->certificate;
        row.agrees = row.expected_exception && outcome.exit_code == kExitVerified;
      } else {
        row.exists = outcome.report.omsr;
        row.method = outcome.report.construction_kind;
        row.aut_order = outcome.report.aut_order;
        row.connected = outcome.report.connected;
        row.agrees = !row.expected_exception && outcome.report.omsr;
      }
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

VerifyOutcome simple_group_check(std::string_view name, std::size_t m,
                                 const ConstructOptions& options) {
  CatalogEntry entry = [&] {
    if (name == "A5") {
      if (m > 3) {
        throw Error(ErrorKind::InvalidArgument, "A5 is checked for m <= 3 only");
      }
      const std::array<long long, 1> p{5};
      return catalog_group("alternating", p);
    }
    if (name == "Z2" || name == "Z3" || name == "Z5" || name == "Z7") {
      const std::array<long long, 1> p{name[1] - '0'};
      return catalog_group("cyclic", p);
    }
    throw Error(ErrorKind::UnknownFamily, "simple group '" + std::string(name) +
                                              "' is not one of Z2, Z3, Z5, Z7, A5");
  }();
  return verify_instance(entry, m, options);
}

}  // namespace omsr
