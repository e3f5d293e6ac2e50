#include "omsr/report.hpp"

#include <chrono>

#include <json.hpp>

#include "omsr/error.hpp"

namespace omsr {

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["group_label"] = group_label;
  j["m"] = m;
  j["construction_kind"] = construction_kind;
  j["valency"] = valency;
  j["oriented"] = oriented;
  j["regular2"] = regular;
  j["connected"] = connected;
  j["aut_order"] = aut_order;
  j["group_order"] = group_order;
  j["stabilizer_order"] = stabilizer_order;
  j["orbit_count"] = orbit_count;
  j["translations_in_aut"] = translations_in_aut;
  j["omsr"] = omsr;
  j["runtime_ms"] = runtime_ms;
  if (certificate) {
    j["certificate"] = {
        {"tables_enumerated", certificate->tables_enumerated},
        {"oriented_count", certificate->oriented_count},
        {"witness_count", certificate->witness_count},
        {"min_aut_order_seen", certificate->min_aut_order_seen},
        {"max_aut_order_seen", certificate->max_aut_order_seen},
        {"complete", certificate->complete},
    };
  } else {
    j["certificate"] = nullptr;
  }
  return j.dump();
}

VerificationReport is_omsr(const Digraph& g, const Group& group, std::size_t m,
                           std::size_t valency, const AutOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (g.vertex_count() != m * group.order()) {
    throw Error(ErrorKind::BlockMismatch, "digraph has " + std::to_string(g.vertex_count()) +
                                              " vertices, expected m*|G| = " +
                                              std::to_string(m * group.order()));
  }
  VerificationReport r;
  r.group_label = group.label();
  r.m = m;
  r.valency = valency;
  r.group_order = group.order();
  r.oriented = is_oriented(g);
  r.regular = is_k_regular(g, valency);
  r.connected = is_strongly_connected(g);

  const auto aut = automorphisms(g, options);
  r.aut_order = aut.order();
  r.orbit_count = aut.orbit_count();
  r.stabilizer_order = g.vertex_count() == 0 ? 1 : stabilizer(aut, 0).order();

  r.translations_in_aut = true;
  for (std::uint32_t x = 0; x < group.order() && r.translations_in_aut; ++x) {
    const auto rg = right_translation(group, m, Element{x});
    r.translations_in_aut = is_automorphism(g, rg) && aut.contains(rg);
  }
  r.omsr = r.oriented && r.regular && r.aut_order == r.group_order;
  r.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

VerificationReport is_omsr(const MCayleyDigraph& g, std::size_t valency,
                           const AutOptions& options) {
  return is_omsr(g.graph(), g.group(), g.m(), valency, options);
}

}  // namespace omsr
