#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "ringmig/constants.hpp"
#include "ringmig/instance.hpp"
#include "ringmig/offline_opt.hpp"
#include "ringmig/verifier.hpp"

namespace ringmig {

enum class Execution { Serial, Parallel };

/// Evaluates fn(0..count-1) and returns the results in index order. With
/// Execution::Parallel the indices are spread over OpenMP threads; the
/// output is identical to the serial path. The first exception (by index)
/// is rethrown after all work finishes.
template <class Fn>
auto map_indexed(std::size_t count, Fn&& fn, Execution exec)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
    using Result = std::invoke_result_t<Fn&, std::size_t>;
    std::vector<std::optional<Result>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    const auto n = static_cast<std::int64_t>(count);
    auto run_one = [&](std::int64_t i) {
        try {
            slots[static_cast<std::size_t>(i)].emplace(fn(static_cast<std::size_t>(i)));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    };
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < n; ++i) run_one(i);
    } else {
        for (std::int64_t i = 0; i < n; ++i) run_one(i);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::vector<Result> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

/// TriAct against the offline optimum on one instance.
struct InstanceCheck {
    std::int64_t triact_cost = 0;
    std::int64_t opt_cost = 0;
    VerificationSummary summary;
};

InstanceCheck check_against_opt(const Instance& instance, const DerivedConstants& constants,
                                DpBudget budget = DpBudget::from_env());

std::vector<InstanceCheck> check_batch(std::span<const Instance> instances,
                                       const DerivedConstants& constants, Execution exec,
                                       DpBudget budget = DpBudget::from_env());

}  // namespace ringmig
