#include "omsr/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "omsr/error.hpp"

namespace omsr {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0U);
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (auto x : images_) {
    if (x >= images_.size() || hit[x]++) {
      throw Error(ErrorKind::InvalidArgument, "image list is not a bijection");
    }
  }
}

Permutation Permutation::from_cycles(const std::vector<std::vector<std::uint32_t>>& cycles,
                                     std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0U);
  std::vector<char> used(degree, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto x = cycle[i];
      if (x >= degree) {
        throw Error(ErrorKind::InvalidArgument,
                    "point " + std::to_string(x) + " outside degree " + std::to_string(degree));
      }
      if (used[x]++) {
        throw Error(ErrorKind::InvalidArgument,
                    "point " + std::to_string(x) + " appears in two cycles");
      }
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) {
      return false;
    }
  }
  return true;
}

std::optional<std::uint32_t> Permutation::first_moved_point() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) {
      return static_cast<std::uint32_t>(x);
    }
  }
  return std::nullopt;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    r.images_[images_[x]] = static_cast<std::uint32_t>(x);
  }
  return r;
}

Permutation Permutation::then(const Permutation& next) const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    r.images_[x] = next.images_[images_[x]];
  }
  return r;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<char> done(images_.size(), 0);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) {
      continue;
    }
    any = true;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      if (!first) {
        os << ' ';
      }
      os << x;
      first = false;
      x = images_[x];
    }
    os << ')';
  }
  if (!any) {
    return "()";
  }
  return os.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : p.images()) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<std::vector<std::uint32_t>> parse_cycle_notation(std::string_view text, int line) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto col = [&] { return static_cast<int>(i) + 1; };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };
  skip_ws();
  if (i == text.size()) {
    throw Error(ErrorKind::Parse, "expected a permutation in cycle notation", line, col());
  }
  while (true) {
    skip_ws();
    if (i == text.size()) {
      break;
    }
    if (text[i] != '(') {
      throw Error(ErrorKind::Parse, "expected '('", line, col());
    }
    ++i;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) {
        throw Error(ErrorKind::Parse, "unterminated cycle", line, col());
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw Error(ErrorKind::Parse, std::string("unexpected character '") + text[i] + "'", line,
                    col());
      }
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > 0xFFFFFFF) {
          throw Error(ErrorKind::Parse, "point index too large", line, col());
        }
        ++i;
      }
      if (std::find(cycle.begin(), cycle.end(), value) != cycle.end()) {
        throw Error(ErrorKind::Parse, "point repeated inside a cycle", line, col());
      }
      cycle.push_back(static_cast<std::uint32_t>(value));
    }
    if (cycle.size() > 1) {
      cycles.push_back(std::move(cycle));
    }
  }
  return cycles;
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  return Permutation::from_cycles(parse_cycle_notation(text), degree);
}

// ---------------------------------------------------------------------------

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                                 std::span<const std::uint32_t> base_prefix)
    : degree_(degree) {
  for (auto b : base_prefix) {
    add_level(b);
  }
  std::vector<Permutation> nontrivial;
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorKind::InvalidArgument, "generator degree mismatch");
    }
    if (!g.is_identity()) {
      nontrivial.push_back(g);
    }
  }
  if (nontrivial.empty()) {
    for (std::size_t k = 0; k < levels_.size(); ++k) {
      rebuild_orbit(k);
    }
    return;
  }
  if (levels_.empty()) {
    add_level(*nontrivial.front().first_moved_point());
  }
  levels_[0].own = std::move(nontrivial);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = levels_.size(); k-- > 0 && !changed;) {
      rebuild_orbit(k);
      const auto gens = strong_generators(k);
      const auto& lv = levels_[k];
      for (std::size_t pi = 0; pi < lv.orbit.size() && !changed; ++pi) {
        for (const auto& s : gens) {
          const auto p = lv.orbit[pi];
          const auto ps = s(p);
          Permutation h = lv.transversal[static_cast<std::size_t>(lv.slot[p])]
                              .then(s)
                              .then(lv.transversal_inv[static_cast<std::size_t>(lv.slot[ps])]);
          auto [residue, stop] = sift(std::move(h), k + 1);
          if (residue.is_identity()) {
            continue;
          }
          if (stop == levels_.size()) {
            add_level(*residue.first_moved_point());
          }
          levels_[stop].own.push_back(std::move(residue));
          // Orbits of deeper levels are stale; rebuild them before resuming.
          for (std::size_t d = levels_.size(); d-- > k + 1;) {
            rebuild_orbit(d);
          }
          changed = true;
          break;
        }
      }
    }
  }
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    rebuild_orbit(k);
  }
}

void StabilizerChain::add_level(std::uint32_t base) {
  if (base >= degree_) {
    throw Error(ErrorKind::InvalidArgument, "base point outside the degree");
  }
  Level lv;
  lv.base = base;
  levels_.push_back(std::move(lv));
  rebuild_orbit(levels_.size() - 1);
}

std::vector<Permutation> StabilizerChain::strong_generators(std::size_t level) const {
  std::vector<Permutation> out;
  for (std::size_t k = level; k < levels_.size(); ++k) {
    out.insert(out.end(), levels_[k].own.begin(), levels_[k].own.end());
  }
  return out;
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
  auto& lv = levels_[level];
  const auto gens = strong_generators(level);
  lv.orbit.assign(1, lv.base);
  lv.slot.assign(degree_, -1);
  lv.transversal.assign(1, Permutation(degree_));
  lv.transversal_inv.assign(1, Permutation(degree_));
  lv.slot[lv.base] = 0;
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    const auto p = lv.orbit[head];
    for (const auto& s : gens) {
      const auto q = s(p);
      if (lv.slot[q] >= 0) {
        continue;
      }
      lv.slot[q] = static_cast<int>(lv.orbit.size());
      lv.orbit.push_back(q);
      Permutation u = lv.transversal[head].then(s);
      lv.transversal_inv.push_back(u.inverse());
      lv.transversal.push_back(std::move(u));
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation p, std::size_t start) const {
  for (std::size_t k = start; k < levels_.size(); ++k) {
    const auto& lv = levels_[k];
    const auto img = p(lv.base);
    if (lv.slot[img] < 0) {
      return {std::move(p), k};
    }
    p = p.then(lv.transversal_inv[static_cast<std::size_t>(lv.slot[img])]);
  }
  return {std::move(p), levels_.size()};
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t total = 1;
  for (const auto& lv : levels_) {
    if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(lv.orbit.size()), &total)) {
      throw Error(ErrorKind::TooLarge, "group order exceeds 64 bits");
    }
  }
  return total;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) {
    return false;
  }
  auto [residue, stop] = sift(p, 0);
  return stop == levels_.size() && residue.is_identity();
}

// ---------------------------------------------------------------------------

std::optional<std::vector<Permutation>> enumerate_elements(
    std::size_t degree, std::span<const Permutation> generators, std::uint64_t cap) {
  std::vector<Permutation> elements{Permutation(degree)};
  std::unordered_set<Permutation, PermutationHash> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Permutation next = elements[head].then(g);
      if (seen.contains(next)) {
        continue;
      }
      if (elements.size() >= cap) {
        return std::nullopt;
      }
      seen.insert(next);
      elements.push_back(std::move(next));
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  chain_ = std::make_shared<const StabilizerChain>(degree_, generators_);
  order_ = chain_->order();
  if (order_ <= kMaterializeCap) {
    elements_ = enumerate_elements(degree_, generators_, kMaterializeCap);
    if (!elements_ || elements_->size() != order_) {
      throw std::logic_error("closure recount disagrees with the stabilizer chain order");
    }
  }
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (elements_) {
    return std::binary_search(elements_->begin(), elements_->end(), p);
  }
  return chain_->contains(p);
}

std::vector<std::uint32_t> PermutationGroup::orbit(std::uint32_t v) const {
  std::vector<char> in(degree_, 0);
  std::vector<std::uint32_t> out{v};
  in[v] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators_) {
      const auto w = g(out[head]);
      if (!in[w]) {
        in[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> PermutationGroup::orbit_ids() const {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> ids(degree_, kUnset);
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < degree_; ++v) {
    if (ids[v] != kUnset) {
      continue;
    }
    for (auto w : orbit(v)) {
      ids[w] = next;
    }
    ++next;
  }
  return ids;
}

std::size_t PermutationGroup::orbit_count() const {
  const auto ids = orbit_ids();
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

std::string PermutationGroup::to_json() const {
  nlohmann::json j;
  j["degree"] = degree_;
  j["order"] = order_;
  auto gens = nlohmann::json::array();
  for (const auto& g : generators_) {
    gens.push_back(g.to_cycle_string());
  }
  j["generators"] = gens;
  return j.dump();
}

PermutationGroup stabilizer(const PermutationGroup& group, std::uint32_t v) {
  if (v >= group.degree()) {
    throw Error(ErrorKind::InvalidArgument, "vertex outside the degree");
  }
  const std::uint32_t prefix[] = {v};
  StabilizerChain chain(group.degree(), group.generators(), prefix);
  auto gens = chain.strong_generators(1);
  PermutationGroup result(group.degree(), std::move(gens));
  if (group.elements() && result.elements()) {
    std::vector<Permutation> fixing;
    for (const auto& g : *group.elements()) {
      if (g(v) == v) {
        fixing.push_back(g);
      }
    }
    if (fixing != *result.elements()) {
      throw std::logic_error("stabilizer disagrees with the filtered element list");
    }
  }
  return result;
}

}  // namespace omsr
