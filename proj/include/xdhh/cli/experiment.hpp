#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "xdhh/algorithms/factory.hpp"
#include "xdhh/core/io_util.hpp"
#include "xdhh/core/result_io.hpp"
#include "xdhh/core/runner.hpp"
#include "xdhh/domains/factory.hpp"

namespace xdhh {

inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string fnv1a64_hex(const std::string& bytes) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(bytes);
  return out.str();
}

// One cell of an experiment: a (domain, instance, algorithm) triple run once
// per listed seed under a shared budget.
struct PlanRun {
  std::string domain;
  std::string instance_path;      // empty when generated
  nlohmann::json generate_params; // null when read from disk
  std::string instance_stem;      // identity used in result filenames
  std::string algorithm;
  std::vector<std::uint64_t> seeds;
  RunBudget budget;
};

struct ExperimentPlan {
  std::vector<PlanRun> runs;
};

inline std::string result_filename(const PlanRun& r, std::uint64_t seed) {
  return r.domain + "_" + r.instance_stem + "_" + r.algorithm + "_s" +
         std::to_string(seed) + ".json";
}

// Parses and fully validates a plan document. Every problem is reported as
// PlanInvalid before any run starts; file instances must already exist.
inline ExperimentPlan parse_plan(const nlohmann::json& doc) {
  auto fail = [](const std::string& msg) { raise(Errc::PlanInvalid, msg); };
  if (!doc.is_object() || !doc.contains("runs") || !doc["runs"].is_array() ||
      doc["runs"].empty())
    fail("plan must be an object with a non-empty 'runs' array");

  ExperimentPlan plan;
  std::set<std::string> filenames;
  for (std::size_t i = 0; i < doc["runs"].size(); ++i) {
    const nlohmann::json& j = doc["runs"][i];
    std::string where = "runs[" + std::to_string(i) + "]: ";
    if (!j.is_object()) fail(where + "entry must be an object");
    PlanRun r;
    try {
      r.domain = j.at("domain").get<std::string>();
      r.algorithm = j.at("algorithm").get<std::string>();
      for (const auto& s : j.at("seeds")) r.seeds.push_back(s.get<std::uint64_t>());
    } catch (const nlohmann::json::exception& e) {
      fail(where + e.what());
    }
    const auto& dids = domain_ids();
    if (std::find(dids.begin(), dids.end(), r.domain) == dids.end())
      fail(where + "unknown domain '" + r.domain + "'");
    const auto& aids = algorithm_ids();
    if (std::find(aids.begin(), aids.end(), r.algorithm) == aids.end())
      fail(where + "unknown algorithm '" + r.algorithm + "'");
    if (r.seeds.empty()) fail(where + "'seeds' must be non-empty");
    if (std::set<std::uint64_t>(r.seeds.begin(), r.seeds.end()).size() !=
        r.seeds.size())
      fail(where + "seeds must be distinct within a run entry");

    if (!j.contains("instance")) fail(where + "missing 'instance'");
    const nlohmann::json& inst = j["instance"];
    if (inst.is_string()) {
      r.instance_path = inst.get<std::string>();
      if (!std::filesystem::is_regular_file(r.instance_path))
        fail(where + "instance file '" + r.instance_path + "' does not exist");
      r.instance_stem = std::filesystem::path(r.instance_path).stem().string();
    } else if (inst.is_object() && inst.contains("generate")) {
      r.generate_params = inst["generate"];
      try {
        generate_instance_text(r.domain, r.generate_params);  // dry run
      } catch (const Error& e) {
        fail(where + e.what());
      }
      r.instance_stem = "run" + std::to_string(i) + "-" + r.domain;
    } else {
      fail(where + "'instance' must be a path or {\"generate\": {...}}");
    }

    if (!j.contains("budget") || !j["budget"].is_object())
      fail(where + "missing 'budget' object");
    const nlohmann::json& b = j["budget"];
    bool evals = b.contains("evaluations");
    bool wall = b.contains("wallclock_ms");
    if (evals == wall)
      fail(where + "budget needs exactly one of 'evaluations'/'wallclock_ms'");
    try {
      r.budget = evals ? RunBudget::evaluations(b["evaluations"].get<std::uint64_t>())
                       : RunBudget::wall_clock_ms(b["wallclock_ms"].get<std::uint64_t>());
    } catch (const nlohmann::json::exception& e) {
      fail(where + e.what());
    }
    if (r.budget.limit == 0) fail(where + "budget limit must be positive");

    for (std::uint64_t s : r.seeds)
      if (!filenames.insert(result_filename(r, s)).second)
        fail(where + "duplicate run '" + result_filename(r, s) + "'");
    plan.runs.push_back(std::move(r));
  }
  return plan;
}

inline ExperimentPlan parse_plan_file(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::PlanInvalid, "plan '" + path + "': " + e.what());
  }
  return parse_plan(doc);
}

struct RunOutcome {
  std::string file;   // result filename relative to the output directory
  std::string domain;
  std::string algorithm;
  std::uint64_t seed = 0;
  double best_value = 0.0;
  bool ok = false;
  std::string error;
};

struct ExperimentReport {
  std::vector<RunOutcome> outcomes;
  std::vector<std::string> files;  // everything written except the manifest
  std::size_t failures = 0;
};

namespace detail {

struct Job {
  const PlanRun* run;
  std::uint64_t seed;
  std::string instance_path;  // resolved (generated instances materialized)
};

inline RunOutcome execute_job(const Job& job, const std::string& out_dir,
                              bool write_trace, std::vector<std::string>& files) {
  RunOutcome o;
  o.file = result_filename(*job.run, job.seed);
  o.domain = job.run->domain;
  o.algorithm = job.run->algorithm;
  o.seed = job.seed;
  try {
    auto domain = make_domain(job.run->domain);
    domain->load_instance(job.instance_path);
    auto algorithm = make_hyper_heuristic(job.run->algorithm);
    RunResult result = run(*algorithm, *domain, job.run->budget, job.seed);
    write_file_atomic(out_dir + "/" + o.file, serialize_run_result(result));
    files.push_back(o.file);
    if (write_trace) {
      std::string trace_name =
          o.file.substr(0, o.file.size() - 5) + ".trace.csv";
      write_file_atomic(out_dir + "/" + trace_name, trace_to_csv(result.trace));
      files.push_back(trace_name);
    }
    o.best_value = result.best_value;
    o.ok = true;
  } catch (const Error& e) {
    o.error = e.what();
  } catch (const std::exception& e) {
    o.error = e.what();
  }
  return o;
}

}  // namespace detail

// Runs every (cell, seed) job, writing one result JSON each plus a manifest
// of content hashes. Failed runs are recorded and do not stop the rest.
inline ExperimentReport run_plan(const ExperimentPlan& plan,
                                 const std::string& out_dir, int jobs = 1,
                                 bool write_traces = false) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  std::vector<std::string> instance_files;
  std::vector<detail::Job> queue;
  for (const PlanRun& r : plan.runs) {
    std::string path = r.instance_path;
    if (path.empty()) {
      std::string rel = "instances/" + r.instance_stem + "." +
                        instance_extension(r.domain);
      path = out_dir + "/" + rel;
      fs::create_directories(out_dir + "/instances");
      write_file_atomic(path, generate_instance_text(r.domain, r.generate_params));
      instance_files.push_back(rel);
    }
    for (std::uint64_t s : r.seeds) queue.push_back({&r, s, path});
  }

  ExperimentReport report;
  report.files = instance_files;
  report.outcomes.resize(queue.size());
  std::vector<std::vector<std::string>> per_job_files(queue.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= queue.size()) return;
      report.outcomes[i] =
          detail::execute_job(queue[i], out_dir, write_traces, per_job_files[i]);
    }
  };
  int workers = std::max(1, std::min<int>(jobs, static_cast<int>(queue.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  for (const auto& fs_list : per_job_files)
    report.files.insert(report.files.end(), fs_list.begin(), fs_list.end());
  std::sort(report.files.begin(), report.files.end());
  for (const RunOutcome& o : report.outcomes)
    if (!o.ok) ++report.failures;

  nlohmann::json manifest_files = nlohmann::json::array();
  for (const std::string& rel : report.files)
    manifest_files.push_back(
        {{"name", rel}, {"fnv1a64", fnv1a64_hex(read_file(out_dir + "/" + rel))}});
  nlohmann::json failures = nlohmann::json::array();
  for (const RunOutcome& o : report.outcomes)
    if (!o.ok) failures.push_back({{"run", o.file}, {"error", o.error}});
  nlohmann::json manifest{{"files", manifest_files}, {"failures", failures}};
  write_file_atomic(out_dir + "/manifest.json", manifest.dump(2) + "\n");
  return report;
}

// Re-hashes every file listed in a manifest; true iff all still match.
inline bool verify_manifest(const std::string& out_dir) {
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(read_file(out_dir + "/manifest.json"));
    for (const auto& f : manifest.at("files")) {
      std::string content = read_file(out_dir + "/" + f.at("name").get<std::string>());
      if (fnv1a64_hex(content) != f.at("fnv1a64").get<std::string>()) return false;
    }
  } catch (...) {
    return false;
  }
  return true;
}

}  // namespace xdhh
