#include "omsr/sweep.hpp"

#include <algorithm>
#include <map>
#include <random>

#include <json.hpp>

#include "omsr/error.hpp"

namespace omsr {
namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return 0;
  }
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

// Backtracking over rows of a connection table. Positions in a row are
// p = j*n + t (target block j, element t). Loops, digons and column
// overflows are pruned as soon as the offending row is placed.
class TableEnumerator {
 public:
  TableEnumerator(const Group& group, std::size_t m, std::size_t valency)
      : group_(group), n_(group.order()), m_(m), valency_(valency) {
    const std::size_t width = n_ * m_;
    options_.resize(m_);
    std::vector<std::uint32_t> combo;
    for (std::size_t i = 0; i < m_; ++i) {
      combo.clear();
      collect_row_options(i, 0, combo);
    }
    chosen_.assign(m_, std::vector<std::uint8_t>(width, 0));
    colsum_.assign(m_, 0);
    // Largest contribution any single row can make to a column.
    cap_.assign(m_ * m_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) {
        const std::size_t avail = i == j ? n_ - 1 : n_;
        cap_[i * m_ + j] = std::min(avail, valency_);
      }
    }
  }

  // visit() returns false to stop. Returns true if the whole space (or the
  // node budget) was exhausted without the visitor stopping.
  template <typename Visit>
  bool run(Visit&& visit, std::mt19937_64* rng = nullptr,
           std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max()) {
    nodes_ = 0;
    node_limit_ = node_limit;
    rng_ = rng;
    for (auto& row : chosen_) {
      std::fill(row.begin(), row.end(), 0);
    }
    std::fill(colsum_.begin(), colsum_.end(), 0);
    current_.assign(m_, nullptr);
    return dfs(0, visit);
  }

  ConnectionTable table() const {
    ConnectionTable t(m_, n_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (auto p : *current_[i]) {
        t.add(i, p / n_, Element{static_cast<std::uint32_t>(p % n_)});
      }
    }
    return t;
  }

  Digraph digraph() const {
    std::vector<Arc> arcs;
    arcs.reserve(n_ * m_ * valency_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (auto p : *current_[i]) {
        const std::size_t j = p / n_;
        const Element t{static_cast<std::uint32_t>(p % n_)};
        for (std::uint32_t g = 0; g < n_; ++g) {
          arcs.emplace_back(static_cast<VertexId>(i * n_ + g),
                            static_cast<VertexId>(j * n_ + group_.mul(t, Element{g}).index));
        }
      }
    }
    return Digraph(n_ * m_, arcs);
  }

  bool budget_exhausted() const { return nodes_ >= node_limit_; }

 private:
  void collect_row_options(std::size_t i, std::size_t start, std::vector<std::uint32_t>& combo) {
    if (combo.size() == valency_) {
      options_[i].push_back(combo);
      return;
    }
    for (std::size_t p = start; p < n_ * m_; ++p) {
      const std::size_t j = p / n_;
      const Element t{static_cast<std::uint32_t>(p % n_)};
      if (j == i) {
        if (t == kIdentity) {
          continue;  // loop
        }
        const auto ti = static_cast<std::uint32_t>(i * n_ + group_.inv(t).index);
        if (ti == p || std::find(combo.begin(), combo.end(), ti) != combo.end()) {
          continue;  // digon inside block i
        }
      }
      combo.push_back(static_cast<std::uint32_t>(p));
      collect_row_options(i, p + 1, combo);
      combo.pop_back();
    }
  }

  bool fits(std::size_t i, const std::vector<std::uint32_t>& option) const {
    std::vector<std::size_t> add(m_, 0);
    for (auto p : option) {
      const std::size_t j = p / n_;
      if (colsum_[j] + ++add[j] > valency_) {
        return false;
      }
      if (j < i) {
        const Element t{static_cast<std::uint32_t>(p % n_)};
        if (chosen_[j][i * n_ + group_.inv(t).index]) {
          return false;  // digon with an earlier row
        }
      }
    }
    // Every column must still be fillable by the rows below.
    for (std::size_t j = 0; j < m_; ++j) {
      std::size_t reach = 0;
      for (std::size_t r = i + 1; r < m_; ++r) {
        reach += cap_[r * m_ + j];
      }
      if (colsum_[j] + add[j] + reach < valency_) {
        return false;
      }
    }
    return true;
  }

  template <typename Visit>
  bool dfs(std::size_t i, Visit& visit) {
    if (i == m_) {
      return visit(*this);
    }
    if (++nodes_ > node_limit_) {
      return true;
    }
    std::vector<std::size_t> order(options_[i].size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      order[k] = k;
    }
    if (rng_) {
      std::shuffle(order.begin(), order.end(), *rng_);
    }
    for (auto k : order) {
      const auto& option = options_[i][k];
      if (!fits(i, option)) {
        continue;
      }
      for (auto p : option) {
        chosen_[i][p] = 1;
        ++colsum_[p / n_];
      }
      current_[i] = &option;
      const bool keep_going = dfs(i + 1, visit);
      for (auto p : option) {
        chosen_[i][p] = 0;
        --colsum_[p / n_];
      }
      current_[i] = nullptr;
      if (!keep_going) {
        return false;
      }
      if (nodes_ > node_limit_) {
        return true;
      }
    }
    return true;
  }

  const Group& group_;
  std::size_t n_;
  std::size_t m_;
  std::size_t valency_;
  std::vector<std::vector<std::vector<std::uint32_t>>> options_;
  std::vector<std::vector<std::uint8_t>> chosen_;
  std::vector<std::size_t> colsum_;
  std::vector<std::size_t> cap_;
  std::vector<const std::vector<std::uint32_t>*> current_;
  std::uint64_t nodes_ = 0;
  std::uint64_t node_limit_ = 0;
  std::mt19937_64* rng_ = nullptr;
};

void add_checked(std::uint64_t& acc, u128 v) {
  const u128 sum = static_cast<u128>(acc) + v;
  if (sum > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorKind::TooLarge, "family count exceeds 64 bits");
  }
  acc = static_cast<std::uint64_t>(sum);
}

}  // namespace

std::string_view to_string(SweepVerdict v) {
  return v == SweepVerdict::Exists ? "EXISTS" : "NOT_EXISTS";
}

SweepSummary SweepResult::summary() const {
  return SweepSummary{tables_enumerated, oriented_count,     witness_count,
                      min_aut_order_seen, max_aut_order_seen, complete};
}

std::string SweepResult::to_json(bool include_witnesses) const {
  nlohmann::json j;
  j["group_label"] = group_label;
  j["m"] = m;
  j["valency"] = valency;
  j["tables_enumerated"] = tables_enumerated;
  j["oriented_count"] = oriented_count;
  j["witness_count"] = witness_count;
  j["min_aut_order_seen"] = min_aut_order_seen;
  j["max_aut_order_seen"] = max_aut_order_seen;
  j["complete"] = complete;
  j["verdict"] = to_string(verdict);
  if (include_witnesses) {
    auto list = nlohmann::json::array();
    for (const auto& w : witnesses) {
      list.push_back({{"table", w.table.to_text()},
                      {"connected", w.connected},
                      {"aut_order", w.aut_order}});
    }
    j["witnesses"] = list;
  }
  return j.dump();
}

bool sweep_is_feasible(std::size_t group_order, std::size_t m, const SweepOptions& options) {
  if (!options.enforce_guard) {
    return true;
  }
  return group_order * m <= options.guard_product ||
         (group_order == 1 && m <= options.guard_trivial_m);
}

std::uint64_t count_constrained_families(std::size_t group_order, std::size_t m,
                                         std::size_t valency) {
  using State = std::vector<std::uint8_t>;
  std::map<State, std::uint64_t> layer{{State(m, 0), 1}};
  std::vector<std::uint64_t> choose(valency + 1);
  for (std::size_t c = 0; c <= valency; ++c) {
    choose[c] = binomial(group_order, c);
  }
  for (std::size_t row = 0; row < m; ++row) {
    std::map<State, std::uint64_t> next;
    for (const auto& entry : layer) {
      State s = entry.first;
      const std::uint64_t ways = entry.second;
      // Distribute `valency` elements over the m columns of this row.
      auto spread = [&](auto&& self, std::size_t col, std::size_t left,
                        u128 weight) -> void {
        if (col == m) {
          if (left == 0) {
            add_checked(next[s], weight * ways);
          }
          return;
        }
        const std::size_t room = valency - s[col];
        for (std::size_t c = 0; c <= std::min(left, room); ++c) {
          if (choose[c] == 0) {
            break;
          }
          s[col] = static_cast<std::uint8_t>(s[col] + c);
          self(self, col + 1, left - c, weight * choose[c]);
          s[col] = static_cast<std::uint8_t>(s[col] - c);
        }
      };
      spread(spread, 0, valency, 1);
    }
    layer = std::move(next);
  }
  const auto it = layer.find(State(m, static_cast<std::uint8_t>(valency)));
  return it == layer.end() ? 0 : it->second;
}

SweepResult exhaustive_sweep(const Group& group, std::size_t m, const SweepOptions& options) {
  if (m == 0) {
    throw Error(ErrorKind::InvalidArgument, "m must be positive");
  }
  if (!sweep_is_feasible(group.order(), m, options)) {
    throw Error(ErrorKind::InfeasibleSweep,
                "sweep over " + group.label() + " with m = " + std::to_string(m) +
                    " is outside the enumeration guard");
  }
  SweepResult result;
  result.group_label = group.label();
  result.m = m;
  result.valency = options.valency;
  result.tables_enumerated = count_constrained_families(group.order(), m, options.valency);

  TableEnumerator enumerator(group, m, options.valency);
  const bool finished = enumerator.run([&](const TableEnumerator& e) {
    ++result.oriented_count;
    const Digraph g = e.digraph();
    const auto order = automorphism_order(g, options.aut);
    if (result.min_aut_order_seen == 0 || order < result.min_aut_order_seen) {
      result.min_aut_order_seen = order;
    }
    result.max_aut_order_seen = std::max(result.max_aut_order_seen, order);
    if (order != group.order()) {
      return true;
    }
    ++result.witness_count;
    if (result.witnesses.size() < options.max_stored_witnesses) {
      result.witnesses.push_back(SweepWitness{e.table(), is_strongly_connected(g), order});
    }
    return !options.stop_at_first_witness;
  });
  result.complete = finished;
  std::sort(result.witnesses.begin(), result.witnesses.end(),
            [](const SweepWitness& a, const SweepWitness& b) {
              return a.table.to_text() < b.table.to_text();
            });
  result.verdict = result.witness_count > 0 ? SweepVerdict::Exists : SweepVerdict::NotExists;
  return result;
}

std::optional<ConnectionTable> random_witness_search(const Group& group, std::size_t m,
                                                     const RandomSearchOptions& options) {
  if (m == 0) {
    throw Error(ErrorKind::InvalidArgument, "m must be positive");
  }
  std::mt19937_64 rng(options.seed);
  TableEnumerator enumerator(group, m, options.valency);
  std::optional<ConnectionTable> found;
  for (std::uint64_t attempt = 0; attempt < options.attempts && !found; ++attempt) {
    enumerator.run(
        [&](const TableEnumerator& e) {
          const Digraph g = e.digraph();
          if (automorphism_order(g, options.aut) == group.order()) {
            found = e.table();
          }
          return false;  // one table per restart
        },
        &rng, options.nodes_per_attempt);
  }
  return found;
}

}  // namespace omsr
