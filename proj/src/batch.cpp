#include "ringmig/batch.hpp"

#include "ringmig/policies.hpp"

namespace ringmig {

InstanceCheck check_against_opt(const Instance& instance, const DerivedConstants& constants,
                                DpBudget budget) {
    const PolicyRun run = run_policy(instance, TriActPolicy(constants));
    const Schedule opt = opt_cost(instance, budget);
    InstanceCheck check;
    check.triact_cost = run.schedule.total_cost;
    check.opt_cost = opt.total_cost;
    check.summary = verify_run(instance, run.steps, opt.servers, constants).summary;
    return check;
}

std::vector<InstanceCheck> check_batch(std::span<const Instance> instances,
                                       const DerivedConstants& constants, Execution exec,
                                       DpBudget budget) {
    return map_indexed(
        instances.size(),
        [&](std::size_t i) { return check_against_opt(instances[i], constants, budget); }, exec);
}

}  // namespace ringmig
