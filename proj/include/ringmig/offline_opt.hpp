#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "ringmig/instance.hpp"

namespace ringmig {

/// Raised when a dynamic program would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Limit on L * (number of requests), the number of backpointer cells the
/// work-function DP stores.
struct DpBudget {
    std::int64_t max_cells = kDefaultCells;

    static constexpr std::int64_t kDefaultCells = 20'000'000;
    static constexpr const char* kEnvVar = "RINGMIG_DP_BUDGET";

    /// Reads RINGMIG_DP_BUDGET if set, else the default.
    static DpBudget from_env();
};

/// Work-function value for unreachable positions.
inline constexpr std::int64_t kUnreachable = std::int64_t{1} << 60;

// One step of the work-function recurrence:
//   next[v] = min_u prev[u] + d(u, request) + d(u, v)
// with argmin[v] the smallest u attaining the minimum. All three kernels
// produce identical output.

/// Literal O(L^2) relaxation, serial.
void relax_quadratic(RingSize ring, std::span<const std::int64_t> prev, Position request,
                     std::span<std::int64_t> next, std::span<std::int32_t> argmin);

/// O(L^2) relaxation with the target loop split across OpenMP threads.
void relax_quadratic_omp(RingSize ring, std::span<const std::int64_t> prev, Position request,
                         std::span<std::int64_t> next, std::span<std::int32_t> argmin);

/// O(L) relaxation: two sweeps around the ring (clockwise and
/// counter-clockwise), each carrying the lexicographically smallest
/// (value, origin) pair.
void relax_linear(RingSize ring, std::span<const std::int64_t> prev, Position request,
                  std::span<std::int64_t> next, std::span<std::int32_t> argmin);

enum class DpKernel { Linear, Quadratic, QuadraticOmp };

/// Optimal offline cost and one optimal schedule. Among equal-cost choices
/// the smallest position index wins, so the schedule is deterministic.
/// Throws BudgetExceeded if L * m exceeds the budget.
Schedule opt_cost(const Instance& instance, DpBudget budget = DpBudget::from_env(),
                  DpKernel kernel = DpKernel::Linear);

/// opt_cost through the serial quadratic kernel; kept as the reference.
Schedule opt_cost_reference(const Instance& instance, DpBudget budget = DpBudget::from_env());

/// Exhaustive minimum over all L^m schedules. Requires L <= 12 and m <= 6;
/// throws std::invalid_argument otherwise.
std::int64_t brute_force_opt(const Instance& instance);

}  // namespace ringmig
