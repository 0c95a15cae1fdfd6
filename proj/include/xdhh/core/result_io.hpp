#pragma once

#include <string>

#include <json.hpp>

#include "xdhh/core/errors.hpp"
#include "xdhh/core/trace.hpp"

namespace xdhh {

inline nlohmann::json to_json(const RunResult& r) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& p : r.trace.points())
    trace.push_back(nlohmann::json::array({p.consumed, p.value}));
  return nlohmann::json{
      {"domain", r.domain_id},
      {"instance", r.instance_id},
      {"algorithm", r.algorithm_id},
      {"seed", r.seed},
      {"budget",
       {{"mode", budget_mode_name(r.budget.mode)}, {"limit", r.budget.limit}}},
      {"best_value", r.best_value},
      {"evaluations_used", r.evaluations_used},
      {"trace", trace},
  };
}

inline std::string serialize_run_result(const RunResult& r) {
  return to_json(r).dump(2) + "\n";
}

inline RunResult run_result_from_json(const nlohmann::json& j) {
  RunResult r;
  try {
    r.domain_id = j.at("domain").get<std::string>();
    r.instance_id = j.at("instance").get<std::string>();
    r.algorithm_id = j.at("algorithm").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    std::string mode = j.at("budget").at("mode").get<std::string>();
    if (mode == "evaluations")
      r.budget.mode = RunBudget::Mode::Evaluations;
    else if (mode == "wallclock_ms")
      r.budget.mode = RunBudget::Mode::WallClock;
    else
      raise(Errc::InvalidArgument, "unknown budget mode '" + mode + "'");
    r.budget.limit = j.at("budget").at("limit").get<std::uint64_t>();
    r.best_value = j.at("best_value").get<double>();
    r.evaluations_used = j.at("evaluations_used").get<std::uint64_t>();
    for (const auto& p : j.at("trace"))
      r.trace.record(p.at(0).get<std::uint64_t>(), p.at(1).get<double>());
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::InvalidArgument, std::string("bad run-result JSON: ") + e.what());
  }
  return r;
}

inline std::string trace_to_csv(const FitnessTrace& trace) {
  std::string out = "consumed,value\n";
  for (const auto& p : trace.points()) {
    out += std::to_string(p.consumed);
    out += ',';
    out += nlohmann::json(p.value).dump();
    out += '\n';
  }
  return out;
}

}  // namespace xdhh
