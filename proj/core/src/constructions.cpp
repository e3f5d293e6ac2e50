#include "omsr/constructions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "omsr/error.hpp"

namespace omsr {
namespace {

void require_m(std::size_t m) {
  if (m < 2) {
    throw Error(ErrorKind::InvalidArgument, "m must be at least 2, got " + std::to_string(m));
  }
}

void require_generates(const Group& group, std::span<const Element> gens) {
  for (auto g : gens) {
    if (!group.contains(g)) {
      throw Error(ErrorKind::InvalidArgument,
                  "element " + std::to_string(g.index) + " is not in " + group.label());
    }
  }
  if (!generates(group, gens)) {
    throw Error(ErrorKind::NotGenerating, "given elements do not generate " + group.label());
  }
}

void require_order_at_least_3(const Group& group, Element x, const char* what) {
  const auto o = element_order(group, x);
  if (o < 3) {
    throw Error(ErrorKind::OrderTooSmall, std::string(what) + " has order " + std::to_string(o) +
                                              ", at least 3 is needed");
  }
}

// Shared skeleton: superdiagonal {1} and the closing corner T(m-1,0).
ConnectionTable block_cycle(const Group& group, std::size_t m, Element corner) {
  ConnectionTable t(m, group.order());
  for (std::size_t i = 0; i + 1 < m; ++i) {
    t.set(i, i + 1, {kIdentity});
  }
  t.set(m - 1, 0, {corner});
  return t;
}

bool is_elementary_2(const Group& group) {
  for (std::uint32_t x = 1; x < group.order(); ++x) {
    if (element_order(group, Element{x}) != 2) {
      return false;
    }
  }
  return true;
}

// Pair (x, y) generating G with o(x) >= 3 and o(xy) >= 3. Tries the
// normalisation candidates first, then every pair in index order.
std::optional<NormalizedPair> abelian_pair(const Group& group, Element a, Element b) {
  const Element ab = group.mul(a, b);
  const Element ba = group.mul(b, a);
  const std::array<NormalizedPair, 6> candidates{
      NormalizedPair{a, b},   NormalizedPair{b, a},   NormalizedPair{ab, b},
      NormalizedPair{ab, a}, NormalizedPair{ba, b}, NormalizedPair{ba, a}};
  auto usable = [&](NormalizedPair p) {
    return element_order(group, p.a) >= 3 && element_order(group, group.mul(p.a, p.b)) >= 3;
  };
  for (const auto& p : candidates) {
    if (usable(p)) {
      return p;
    }
  }
  const auto n = static_cast<std::uint32_t>(group.order());
  for (std::uint32_t x = 1; x < n; ++x) {
    for (std::uint32_t y = 1; y < n; ++y) {
      const NormalizedPair p{Element{x}, Element{y}};
      const std::array<Element, 2> gens{p.a, p.b};
      if (usable(p) && generates(group, gens)) {
        return p;
      }
    }
  }
  return std::nullopt;
}

Witness verified_witness(const Group& group, ConstructionRecipe recipe, const ConnectionTable& table,
                         const AutOptions& aut) {
  auto digraph = build_mcayley(group, table);
  auto report = is_omsr(digraph, 2, aut);
  report.construction_kind = std::string(to_string(recipe.kind));
  return Witness{std::move(recipe), std::move(digraph), std::move(report)};
}

constexpr std::uint64_t kQuickRandomAttempts = 500;

// Cached table, else a randomised search, else the first sweep witness. A
// complete sweep without witnesses comes back as a certificate instead.
std::variant<ConnectionTable, SweepSummary> search_table(const Group& group, std::size_t m,
                                                         const ConstructOptions& options) {
  if (options.cache && !options.cache->regenerate) {
    if (auto cached = options.cache->load(group.label(), m, group.order())) {
      return *cached;
    }
  }
  // Lexicographic sweeps can reach their first witness late, so a short
  // randomised pass goes first.
  RandomSearchOptions random = options.random;
  random.aut = options.aut;
  SweepOptions sweep = options.sweep;
  const bool feasible = sweep_is_feasible(group.order(), m, sweep);
  if (feasible) {
    random.attempts = std::min<std::uint64_t>(random.attempts, kQuickRandomAttempts);
  }
  std::optional<ConnectionTable> found = random_witness_search(group, m, random);
  if (!found && feasible) {
    sweep.stop_at_first_witness = true;
    sweep.max_stored_witnesses = 1;
    sweep.aut = options.aut;
    auto result = exhaustive_sweep(group, m, sweep);
    if (result.witnesses.empty()) {
      return result.summary();
    }
    found = result.witnesses.front().table;
  }
  if (!found) {
    throw Error(ErrorKind::SearchBudgetExceeded,
                "no witness found for " + group.label() + " with m = " + std::to_string(m));
  }
  if (options.cache) {
    options.cache->store(group.label(), m, *found);
  }
  return *found;
}

ConstructionResult searched(const Group& group, const GeneratingPair& pair, std::size_t m,
                            const ConstructOptions& options) {
  auto outcome = search_table(group, m, options);
  if (auto* summary = std::get_if<SweepSummary>(&outcome)) {
    return ExceptionVerdict{group.label(), m, *summary, true, false};
  }
  ConstructionRecipe recipe{RecipeKind::SearchWitness, pair, m};
  return verified_witness(group, recipe, std::get<ConnectionTable>(outcome), options.aut);
}

}  // namespace

std::string_view to_string(RecipeKind kind) {
  switch (kind) {
    case RecipeKind::Cyclic:
      return "cyclic";
    case RecipeKind::Abelian2Gen:
      return "abelian_2gen";
    case RecipeKind::NonAbelian2Gen:
      return "nonabelian_2gen";
    case RecipeKind::SearchWitness:
      return "search_witness";
  }
  return "?";
}

std::optional<RecipeKind> parse_recipe(std::string_view text) {
  if (text == "auto") {
    return std::nullopt;
  }
  if (text == "cyclic") {
    return RecipeKind::Cyclic;
  }
  if (text == "abelian") {
    return RecipeKind::Abelian2Gen;
  }
  if (text == "nonabelian") {
    return RecipeKind::NonAbelian2Gen;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown recipe '" + std::string(text) + "'");
}

ConnectionTable cyclic_connection_table(const Group& group, Element a, std::size_t m) {
  require_m(m);
  const std::array<Element, 1> gens{a};
  require_generates(group, gens);
  require_order_at_least_3(group, a, "a");
  ConnectionTable t = block_cycle(group, m, a);
  t.set(0, 0, {a});
  for (std::size_t i = 1; i < m; ++i) {
    t.set(i, i, {group.inv(a)});
  }
  return t;
}

ConnectionTable abelian_connection_table(const Group& group, Element a, Element b,
                                         std::size_t m) {
  require_m(m);
  if (!is_abelian(group)) {
    throw Error(ErrorKind::NotAbelian, group.label() + " is not abelian");
  }
  const std::array<Element, 2> gens{a, b};
  require_generates(group, gens);
  require_order_at_least_3(group, a, "a");
  const Element ab = group.mul(a, b);
  require_order_at_least_3(group, ab, "ab");
  ConnectionTable t = block_cycle(group, m, b);
  t.set(0, 0, {a});
  for (std::size_t i = 1; i < m; ++i) {
    t.set(i, i, {ab});
  }
  return t;
}

ConnectionTable nonabelian_connection_table(const Group& group, Element a, Element b,
                                            std::size_t m) {
  require_m(m);
  if (is_abelian(group)) {
    throw Error(ErrorKind::IsAbelian, group.label() + " is abelian");
  }
  const std::array<Element, 2> gens{a, b};
  require_generates(group, gens);
  require_order_at_least_3(group, a, "a");
  ConnectionTable t = block_cycle(group, m, b);
  for (std::size_t i = 0; i < m; ++i) {
    t.set(i, i, {a});
  }
  return t;
}

std::string ExceptionVerdict::to_json() const {
  nlohmann::json j;
  j["group"] = group_label;
  j["m"] = m;
  j["enumerated_count"] = certificate.tables_enumerated;
  j["oriented_count"] = certificate.oriented_count;
  j["all_failed"] = all_failed;
  j["listed"] = listed;
  j["min_aut_order_seen"] = certificate.min_aut_order_seen;
  j["max_aut_order_seen"] = certificate.max_aut_order_seen;
  return j.dump();
}

bool needs_search_witness(const Group& group) {
  const auto n = group.order();
  return n == 1 || n == 2 || (n == 4 && is_elementary_2(group));
}

bool is_listed_exception(const Group& group, std::size_t m) {
  if (group.order() == 1) {
    return m <= 6;
  }
  return needs_search_witness(group) && m == 2;
}

std::filesystem::path WitnessCache::path_for(const std::string& label, std::size_t m) const {
  std::string name;
  for (char c : label) {
    name += (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '_';
  }
  return directory / (name + "_m" + std::to_string(m) + ".table");
}

std::optional<ConnectionTable> WitnessCache::load(const std::string& label, std::size_t m,
                                                  std::size_t group_order) const {
  std::ifstream in(path_for(label, m));
  if (!in) {
    return std::nullopt;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto table = parse_connection_table(buffer.str(), group_order);
  if (table.m() != m) {
    throw Error(ErrorKind::BlockMismatch, "cached witness " + path_for(label, m).string() +
                                              " has m = " + std::to_string(table.m()));
  }
  return table;
}

void WitnessCache::store(const std::string& label, std::size_t m,
                         const ConnectionTable& table) const {
  std::filesystem::create_directories(directory);
  std::ofstream out(path_for(label, m));
  out << "# " << label << ", m = " << m << "\n" << table.to_text();
  if (!out) {
    throw Error(ErrorKind::InvalidArgument, "cannot write " + path_for(label, m).string());
  }
}

ConstructionResult construct_omsr(const Group& group, const GeneratingPair& pair, std::size_t m,
                                  const ConstructOptions& options) {
  require_m(m);
  std::vector<Element> gens{pair.a};
  if (pair.b) {
    gens.push_back(*pair.b);
  }
  require_generates(group, gens);

  if (options.forced_recipe) {
    ConstructionRecipe recipe{*options.forced_recipe, pair, m};
    switch (recipe.kind) {
      case RecipeKind::Cyclic:
        return verified_witness(group, recipe, cyclic_connection_table(group, pair.a, m),
                                options.aut);
      case RecipeKind::Abelian2Gen:
      case RecipeKind::NonAbelian2Gen: {
        if (!pair.b) {
          throw Error(ErrorKind::NotGenerating, "recipe needs two generators");
        }
        const auto table = recipe.kind == RecipeKind::Abelian2Gen
                               ? abelian_connection_table(group, pair.a, *pair.b, m)
                               : nonabelian_connection_table(group, pair.a, *pair.b, m);
        return verified_witness(group, recipe, table, options.aut);
      }
      case RecipeKind::SearchWitness:
        return searched(group, pair, m, options);
    }
  }

  if (is_listed_exception(group, m)) {
    SweepOptions sweep = options.sweep;
    sweep.stop_at_first_witness = false;
    sweep.aut = options.aut;
    const auto result = exhaustive_sweep(group, m, sweep);
    if (result.witness_count > 0) {
      // The enumeration disagrees with the exception list; report what it found.
      ConstructionRecipe recipe{RecipeKind::SearchWitness, pair, m};
      return verified_witness(group, recipe, result.witnesses.front().table, options.aut);
    }
    return ExceptionVerdict{group.label(), m, result.summary(), true, true};
  }

  if (needs_search_witness(group)) {
    return searched(group, pair, m, options);
  }

  if (auto generator = find_cyclic_generator(group)) {
    const std::array<Element, 1> one{pair.a};
    const Element a = generates(group, one) ? pair.a : *generator;
    ConstructionRecipe recipe{RecipeKind::Cyclic, GeneratingPair{a, std::nullopt}, m};
    auto first = verified_witness(group, recipe, cyclic_connection_table(group, a, m), options.aut);
    if (first.report.omsr) {
      return first;
    }
    const auto n = static_cast<std::uint32_t>(group.order());
    for (std::uint32_t x = 1; x < n; ++x) {
      const std::array<Element, 1> gx{Element{x}};
      if (Element{x} != a && generates(group, gx)) {
        recipe.pair.a = Element{x};
        auto w = verified_witness(group, recipe, cyclic_connection_table(group, Element{x}, m),
                                  options.aut);
        if (w.report.omsr) {
          return w;
        }
      }
    }
    return searched(group, pair, m, options);
  }

  if (!pair.b) {
    throw Error(ErrorKind::NotGenerating, group.label() + " is not cyclic; two generators needed");
  }
  const auto normalized = normalize_generating_pair(group, pair.a, *pair.b);
  if (std::holds_alternative<AllInvolutions>(normalized)) {
    throw std::logic_error("all-involution pair outside Z2^2");
  }
  auto np = std::get<NormalizedPair>(normalized);
  const bool abelian = is_abelian(group);
  if (abelian && element_order(group, group.mul(np.a, np.b)) < 3) {
    const auto alt = abelian_pair(group, pair.a, *pair.b);
    if (!alt) {
      throw std::logic_error("no pair with o(a) >= 3 and o(ab) >= 3 in " + group.label());
    }
    np = *alt;
  }
  const auto kind = abelian ? RecipeKind::Abelian2Gen : RecipeKind::NonAbelian2Gen;
  auto attempt = [&](NormalizedPair p) {
    ConstructionRecipe recipe{kind, GeneratingPair{p.a, p.b}, m};
    const auto table = abelian ? abelian_connection_table(group, p.a, p.b, m)
                               : nonabelian_connection_table(group, p.a, p.b, m);
    return verified_witness(group, recipe, table, options.aut);
  };
  auto first = attempt(np);
  if (first.report.omsr) {
    return first;
  }
  // The recipe is not an OmSR for every pair (Z2 x Z4 at m = 2 fails for all
  // of them), so other pairs are tried before falling back to search.
  const auto n = static_cast<std::uint32_t>(group.order());
  for (std::uint32_t x = 1; x < n; ++x) {
    if (element_order(group, Element{x}) < 3) {
      continue;
    }
    for (std::uint32_t y = 1; y < n; ++y) {
      const NormalizedPair p{Element{x}, Element{y}};
      const std::array<Element, 2> gens{p.a, p.b};
      if ((p.a == np.a && p.b == np.b) || !generates(group, gens)) {
        continue;
      }
      if (abelian ? element_order(group, group.mul(p.a, p.b)) < 3
                  : group.mul(p.a, p.b) == group.mul(p.b, p.a)) {
        continue;
      }
      auto w = attempt(p);
      if (w.report.omsr) {
        return w;
      }
    }
  }
  return searched(group, pair, m, options);
}

}  // namespace omsr
