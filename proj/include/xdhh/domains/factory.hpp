#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "xdhh/core/errors.hpp"
#include "xdhh/domains/binpacking.hpp"
#include "xdhh/domains/flowshop.hpp"
#include "xdhh/domains/maxsat.hpp"
#include "xdhh/domains/personnel.hpp"

namespace xdhh {

inline const std::vector<std::string>& domain_ids() {
  static const std::vector<std::string> ids = {"maxsat", "binpacking",
                                               "flowshop", "personnel"};
  return ids;
}

inline std::unique_ptr<ProblemDomain> make_domain(const std::string& id) {
  if (id == "maxsat") return std::make_unique<MaxSatDomain>();
  if (id == "binpacking") return std::make_unique<BinPackingDomain>();
  if (id == "flowshop") return std::make_unique<FlowShopDomain>();
  if (id == "personnel") return std::make_unique<PersonnelDomain>();
  raise(Errc::UnsupportedDomain, "unknown domain '" + id + "'");
}

inline std::string instance_extension(const std::string& id) {
  if (id == "maxsat") return "cnf";
  if (id == "binpacking" || id == "flowshop") return "txt";
  if (id == "personnel") return "json";
  raise(Errc::UnsupportedDomain, "unknown domain '" + id + "'");
}

// Renders a generated instance in the domain's on-disk format. Parameters are
// a flat JSON object; "seed" is required everywhere, the rest per domain.
inline std::string generate_instance_text(const std::string& id,
                                          const nlohmann::json& params) {
  try {
    std::uint64_t seed = params.at("seed").get<std::uint64_t>();
    if (id == "maxsat")
      return to_dimacs(generate_random_3sat(params.at("variables").get<int>(),
                                            params.value("clause_ratio", 4.3),
                                            seed));
    if (id == "binpacking")
      return to_packing_text(generate_packing_instance(
          params.at("pieces").get<int>(), params.at("capacity").get<long long>(),
          params.value("dist", std::string("uniform")), seed));
    if (id == "flowshop")
      return to_flowshop_text(generate_flowshop_instance(
          params.at("jobs").get<int>(), params.at("machines").get<int>(),
          params.value("pmax", 99LL), seed));
    if (id == "personnel")
      return to_roster_json(generate_roster_instance(
          params.at("employees").get<int>(), params.at("days").get<int>(),
          params.at("shifts").get<int>(), seed));
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::InvalidArgument,
          "bad generator parameters for '" + id + "': " + e.what());
  }
  raise(Errc::UnsupportedDomain, "unknown domain '" + id + "'");
}

}  // namespace xdhh
