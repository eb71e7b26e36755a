#include "gagc/report.hpp"

#include "json.hpp"

namespace gagc {

std::string report_to_json(const ConstructionReport& rep) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < rep.h; ++i) q *= rep.p;
  nlohmann::ordered_json j;
  j["field"] = {{"p", rep.p}, {"h", rep.h}, {"q", q}};
  j["e"] = rep.e;
  j["theorem"] = rep.theorem;
  j["params"] = rep.params;
  j["length"] = rep.length;
  j["dimension"] = rep.dimension;
  j["design_distance_bound"] = rep.design_distance;
  nlohmann::ordered_json checks;
  for (const char* name : {"galois_so", "dimension", "mds", "criterion"}) {
    const CheckOutcome* c = rep.find(name);
    if (c == nullptr) continue;
    checks[name] = {{"verdict", c->verdict},
                    {"mode", c->mode},
                    {"millis", c->millis}};
  }
  j["checks"] = checks;
  j["seed"] = rep.seed;
  return j.dump(2) + "\n";
}

}  // namespace gagc
