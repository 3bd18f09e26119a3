#include "ringmig/offline_opt.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

namespace ringmig {

DpBudget DpBudget::from_env() {
    DpBudget budget;
    if (const char* raw = std::getenv(kEnvVar); raw != nullptr && *raw != '\0') {
        char* end = nullptr;
        const long long value = std::strtoll(raw, &end, 10);
        if (end == raw || *end != '\0' || value <= 0) {
            throw InvalidInput(kEnvVar, std::string(kEnvVar) + " must be a positive integer, got '" +
                                            raw + "'");
        }
        budget.max_cells = value;
    }
    return budget;
}

namespace {

struct Candidate {
    std::int64_t value;
    std::int32_t origin;
};

inline bool better(const Candidate& a, const Candidate& b) {
    return a.value < b.value || (a.value == b.value && a.origin < b.origin);
}

void check_sizes(RingSize ring, std::span<const std::int64_t> prev, std::span<std::int64_t> next,
                 std::span<std::int32_t> argmin) {
    const auto n = static_cast<std::size_t>(ring.length());
    if (prev.size() != n || next.size() != n || argmin.size() != n) {
        throw std::invalid_argument("relax: buffers must have one entry per ring position");
    }
}

}  // namespace

void relax_quadratic(RingSize ring, std::span<const std::int64_t> prev, Position request,
                     std::span<std::int64_t> next, std::span<std::int32_t> argmin) {
    check_sizes(ring, prev, next, argmin);
    const std::int64_t len = ring.length();
    for (std::int64_t v = 0; v < len; ++v) {
        Candidate best{kUnreachable * 2, 0};
        for (std::int64_t u = 0; u < len; ++u) {
            const std::int64_t value = prev[u] + dist(ring, u, request) + dist(ring, u, v);
            if (value < best.value) best = {value, static_cast<std::int32_t>(u)};
        }
        next[v] = best.value;
        argmin[v] = best.origin;
    }
}

void relax_quadratic_omp(RingSize ring, std::span<const std::int64_t> prev, Position request,
                         std::span<std::int64_t> next, std::span<std::int32_t> argmin) {
    check_sizes(ring, prev, next, argmin);
    const std::int64_t len = ring.length();
    std::vector<std::int64_t> serve(static_cast<std::size_t>(len));
    for (std::int64_t u = 0; u < len; ++u) serve[u] = prev[u] + dist(ring, u, request);

#pragma omp parallel for schedule(static)
    for (std::int64_t v = 0; v < len; ++v) {
        std::int64_t best = kUnreachable * 2;
        std::int32_t origin = 0;
        for (std::int64_t u = 0; u < len; ++u) {
            const std::int64_t value = serve[u] + dist(ring, u, v);
            if (value < best) {
                best = value;
                origin = static_cast<std::int32_t>(u);
            }
        }
        next[v] = best;
        argmin[v] = origin;
    }
}

void relax_linear(RingSize ring, std::span<const std::int64_t> prev, Position request,
                  std::span<std::int64_t> next, std::span<std::int32_t> argmin) {
    check_sizes(ring, prev, next, argmin);
    const std::int64_t len = ring.length();
    std::vector<Candidate> served(static_cast<std::size_t>(len));
    for (std::int64_t u = 0; u < len; ++u) {
        served[u] = {prev[u] + dist(ring, u, request), static_cast<std::int32_t>(u)};
    }

    // After one full lap every origin has been seen at clockwise distance < L,
    // so the second lap holds the exact clockwise minimum.
    std::vector<Candidate> clockwise(static_cast<std::size_t>(len));
    Candidate carry = served[0];
    for (std::int64_t step = 1; step < 2 * len; ++step) {
        const std::int64_t v = step % len;
        carry.value += 1;
        if (better(served[v], carry)) carry = served[v];
        if (step >= len) clockwise[v] = carry;
    }

    carry = served[len - 1];
    for (std::int64_t step = 1; step < 2 * len; ++step) {
        const std::int64_t v = len - 1 - step % len;
        carry.value += 1;
        if (better(served[v], carry)) carry = served[v];
        if (step >= len) {
            const Candidate& cw = clockwise[v];
            const Candidate& pick = better(cw, carry) ? cw : carry;
            next[v] = pick.value;
            argmin[v] = pick.origin;
        }
    }
}

Schedule opt_cost(const Instance& instance, DpBudget budget, DpKernel kernel) {
    validate(instance);
    const RingSize ring = instance.ring;
    const auto len = static_cast<std::size_t>(ring.length());
    const std::size_t m = instance.requests.size();
    if (m > 0 && static_cast<std::int64_t>(len) > budget.max_cells / static_cast<std::int64_t>(m)) {
        throw BudgetExceeded("offline DP needs L*m = " + std::to_string(len) + "*" +
                             std::to_string(m) + " cells, budget is " +
                             std::to_string(budget.max_cells) + " (set " + DpBudget::kEnvVar +
                             " to raise it)");
    }

    std::vector<std::int64_t> work(len, kUnreachable);
    std::vector<std::int64_t> scratch(len);
    work[static_cast<std::size_t>(instance.s0)] = 0;
    std::vector<std::int32_t> back(len * m);

    for (std::size_t i = 0; i < m; ++i) {
        std::span<std::int32_t> row(back.data() + i * len, len);
        switch (kernel) {
            case DpKernel::Linear: relax_linear(ring, work, instance.requests[i], scratch, row); break;
            case DpKernel::Quadratic: relax_quadratic(ring, work, instance.requests[i], scratch, row); break;
            case DpKernel::QuadraticOmp:
                relax_quadratic_omp(ring, work, instance.requests[i], scratch, row);
                break;
        }
        work.swap(scratch);
    }

    Schedule schedule;
    schedule.servers.assign(m + 1, instance.s0);
    const auto best = std::min_element(work.begin(), work.end());
    schedule.total_cost = *best;
    if (m == 0) return schedule;

    Position at = static_cast<Position>(best - work.begin());
    for (std::size_t i = m; i >= 1; --i) {
        schedule.servers[i] = at;
        at = back[(i - 1) * len + static_cast<std::size_t>(at)];
    }
    return schedule;
}

Schedule opt_cost_reference(const Instance& instance, DpBudget budget) {
    return opt_cost(instance, budget, DpKernel::Quadratic);
}

namespace {

void enumerate(const Instance& instance, std::size_t i, Position at, std::int64_t cost,
               std::int64_t& best) {
    if (cost >= best) return;
    if (i == instance.requests.size()) {
        best = cost;
        return;
    }
    const std::int64_t service = dist(instance.ring, at, instance.requests[i]);
    for (Position next = 0; next < instance.ring.length(); ++next) {
        enumerate(instance, i + 1, next, cost + service + dist(instance.ring, at, next), best);
    }
}

}  // namespace

std::int64_t brute_force_opt(const Instance& instance) {
    validate(instance);
    if (instance.ring.length() > 12 || instance.requests.size() > 6) {
        throw std::invalid_argument("brute_force_opt: requires L <= 12 and at most 6 requests");
    }
    std::int64_t best = kUnreachable;
    enumerate(instance, 0, instance.s0, 0, best);
    return best;
}

}  // namespace ringmig
