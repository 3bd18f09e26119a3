#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ringmig/batch.hpp"
#include "ringmig/offline_opt.hpp"
#include "ringmig/report.hpp"

namespace ringmig::cli {

/// Entry point of the `ringmig` tool. Returns the process exit code; errors
/// are written to `err` as one JSON line {"error": ..., "field": ...}.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

Json cmd_rho();

/// Report of one policy run: costs, case counts, optimum and ratio (null
/// when the optimum is zero or over budget), and for TriAct the
/// verification summary against the optimal schedule.
Json cmd_simulate(const Instance& instance, const std::string& policy, DpBudget budget,
                  std::vector<StepRecord>* steps_out = nullptr);

Json cmd_opt(const Instance& instance, DpBudget budget);

/// Verification of TriAct against `offline` (t_0..t_n), or against the
/// optimal schedule when none is given.
Json cmd_verify(const Instance& instance, const std::optional<std::vector<Position>>& offline,
                DpBudget budget, std::vector<EventRecord>* events_out = nullptr);

Json cmd_lowerbound(std::int64_t ring_length, std::int64_t periods, bool skip_opt, DpBudget budget);

inline constexpr std::string_view kSweepCsvHeader =
    "L,m,seed,workload,policy,policy_cost,opt_cost,ratio,max_delta2_excess,trailing_slack,"
    "bound_holds";

/// Sweep config: {"L": [..], "m": [..], "seeds": [..], "policies": [..],
/// "workload": "random"|"walk", "step_bound": int}. Returns CSV text with
/// one row per (L, m, seed, policy) in config order.
std::string cmd_sweep(const Json& config, DpBudget budget, Execution exec);

}  // namespace ringmig::cli
