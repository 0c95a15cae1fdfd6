#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xdhh/analysis/report.hpp"
#include "xdhh/cli/experiment.hpp"

namespace {

std::string default_out_dir() {
  const char* env = std::getenv("XDHH_OUT");
  return env && *env ? env : "results";
}

int cmd_run(const std::string& plan_path, const std::string& domain,
            const std::string& instance, const std::string& algorithm,
            const std::vector<std::uint64_t>& seeds, std::uint64_t budget_evals,
            std::uint64_t budget_ms, const std::string& out, int jobs,
            bool trace_csv) {
  xdhh::ExperimentPlan plan;
  if (!plan_path.empty()) {
    plan = xdhh::parse_plan_file(plan_path);
  } else {
    nlohmann::json budget = budget_ms > 0
                                ? nlohmann::json{{"wallclock_ms", budget_ms}}
                                : nlohmann::json{{"evaluations", budget_evals}};
    nlohmann::json doc{{"runs",
                        {{{"domain", domain},
                          {"instance", instance},
                          {"algorithm", algorithm},
                          {"seeds", seeds},
                          {"budget", budget}}}}};
    plan = xdhh::parse_plan(doc);
  }
  xdhh::ExperimentReport report = xdhh::run_plan(plan, out, jobs, trace_csv);
  for (const xdhh::RunOutcome& o : report.outcomes) {
    if (o.ok)
      std::cout << o.file << "  best=" << o.best_value << "\n";
    else
      std::cerr << "FAILED " << o.file << ": " << o.error << "\n";
  }
  std::cout << report.outcomes.size() - report.failures << "/"
            << report.outcomes.size() << " runs completed, results in " << out
            << "\n";
  return report.failures == 0 ? 0 : 1;
}

int cmd_generate(const std::string& domain, const std::string& out,
                 const nlohmann::json& params) {
  xdhh::write_file_atomic(out, xdhh::generate_instance_text(domain, params));
  std::cout << "wrote " << out << "\n";
  return 0;
}

int cmd_report(const std::string& results, const std::string& out) {
  xdhh::BordaReport report = xdhh::write_borda_report(results, out);
  std::cout << std::left << std::setw(24) << "domain";
  for (const std::string& a : report.algorithms)
    std::cout << std::right << std::setw(10) << a;
  std::cout << "\n";
  for (const auto& [dom, subtotals] : report.totals.per_domain) {
    std::cout << std::left << std::setw(24) << dom;
    for (long long t : subtotals) std::cout << std::right << std::setw(10) << t;
    std::cout << "\n";
  }
  std::cout << std::left << std::setw(24) << "overall";
  for (long long t : report.totals.overall)
    std::cout << std::right << std::setw(10) << t;
  std::cout << "\n(lower totals are better)\n";
  std::cout << "report written to " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cross-domain heuristic search workbench"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "execute a plan or a single run");
  std::string plan_path, domain, instance, algorithm = "ils";
  std::string out = default_out_dir();
  std::vector<std::uint64_t> seeds{1};
  std::uint64_t budget_evals = 100000, budget_ms = 0;
  int jobs = 1;
  bool trace_csv = false;
  auto* plan_opt = run->add_option("--plan", plan_path, "JSON plan for batches");
  auto* dom_opt = run->add_option("--domain", domain, "problem domain")
                      ->check(CLI::IsMember(xdhh::domain_ids()));
  run->add_option("--instance", instance, "instance file path")->needs(dom_opt);
  run->add_option("--algorithm", algorithm, "search algorithm")
      ->check(CLI::IsMember(xdhh::algorithm_ids()));
  run->add_option("--seed", seeds, "run seeds (repeatable)");
  auto* be = run->add_option("--budget-evals", budget_evals, "evaluation budget");
  auto* bm = run->add_option("--budget-ms", budget_ms, "wall-clock budget (ms)");
  bm->excludes(be);
  plan_opt->excludes(dom_opt);
  run->add_option("--out", out, "output directory (default $XDHH_OUT or ./results)");
  run->add_option("--jobs", jobs, "parallel runs")->check(CLI::PositiveNumber);
  run->add_flag("--trace-csv", trace_csv, "also write per-run trace CSVs");

  // generate
  auto* gen = app.add_subcommand("generate", "write a synthetic instance file");
  std::string gen_domain, gen_out;
  std::uint64_t gen_seed = 1;
  int variables = 0, pieces = 0, fs_jobs = 0, machines = 0, employees = 0,
      days = 0, shifts = 0;
  long long capacity = 0, pmax = 0;
  double clause_ratio = 0.0;
  std::string dist;
  gen->add_option("--domain", gen_domain, "problem domain")
      ->required()
      ->check(CLI::IsMember(xdhh::domain_ids()));
  gen->add_option("--out", gen_out, "output file")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--variables", variables, "maxsat: variable count");
  gen->add_option("--clause-ratio", clause_ratio, "maxsat: clauses per variable");
  gen->add_option("--pieces", pieces, "binpacking: piece count");
  gen->add_option("--capacity", capacity, "binpacking: bin capacity");
  gen->add_option("--dist", dist, "binpacking: uniform or triplet");
  gen->add_option("--jobs", fs_jobs, "flowshop: job count");
  gen->add_option("--machines", machines, "flowshop: machine count");
  gen->add_option("--pmax", pmax, "flowshop: max processing time");
  gen->add_option("--employees", employees, "personnel: employee count");
  gen->add_option("--days", days, "personnel: planning days");
  gen->add_option("--shifts", shifts, "personnel: shift types");

  // report
  auto* rep = app.add_subcommand("report", "aggregate results into a Borda report");
  std::string rep_results, rep_out;
  rep->add_option("--results", rep_results, "directory of run-result JSONs")
      ->required();
  rep->add_option("--out", rep_out, "report output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      if (plan_path.empty() && instance.empty()) {
        std::cerr << "error: provide --plan or --domain/--instance\n";
        return 1;
      }
      return cmd_run(plan_path, domain, instance, algorithm, seeds,
                     budget_evals, budget_ms, out, jobs, trace_csv);
    }
    if (gen->parsed()) {
      nlohmann::json params{{"seed", gen_seed}};
      if (variables > 0) params["variables"] = variables;
      if (clause_ratio > 0) params["clause_ratio"] = clause_ratio;
      if (pieces > 0) params["pieces"] = pieces;
      if (capacity > 0) params["capacity"] = capacity;
      if (!dist.empty()) params["dist"] = dist;
      if (fs_jobs > 0) params["jobs"] = fs_jobs;
      if (machines > 0) params["machines"] = machines;
      if (pmax > 0) params["pmax"] = pmax;
      if (employees > 0) params["employees"] = employees;
      if (days > 0) params["days"] = days;
      if (shifts > 0) params["shifts"] = shifts;
      return cmd_generate(gen_domain, gen_out, params);
    }
    if (rep->parsed())
      return cmd_report(rep_results, rep_out.empty() ? rep_results : rep_out);
  } catch (const xdhh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
