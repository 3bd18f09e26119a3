#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "ringmig/constants.hpp"
#include "ringmig/instance.hpp"
#include "ringmig/ring.hpp"

namespace ringmig {

/// Branch of the TriAct decision chain; None for policies without cases.
enum class CaseLabel { A, B, C, D, E, F, None };

std::string_view to_string(CaseLabel label) noexcept;

struct PolicyState {
    RingSize ring;
    Position server;
    Position prev_request;

    /// State before the first request: the previous request is taken to be
    /// the initial server.
    static PolicyState initial(RingSize ring, Position s0) { return {ring, s0, s0}; }
};

struct Decision {
    Position new_server;
    CaseLabel label = CaseLabel::None;
    std::int64_t service_cost = 0;
    std::int64_t migration_cost = 0;
    // Set when (x, y) lies within 1e-6*L of a D/E threshold line. Diagnostic
    // only; the decision itself is unaffected.
    bool near_boundary = false;
};

/// Label among D, E, F for a configuration with x + y + z = L, using the
/// threshold lines y1..y4. `near_boundary`, if given, is set as in Decision.
CaseLabel classify_far_case(std::int64_t x, std::int64_t y, RingSize ring,
                            const DerivedConstants& constants, bool* near_boundary = nullptr);

Decision triact_decide(const PolicyState& state, Position request,
                       const DerivedConstants& constants);
Decision never_move_decide(const PolicyState& state, Position request);
Decision move_to_request_decide(const PolicyState& state, Position request);

class MigrationPolicy {
public:
    virtual ~MigrationPolicy() = default;
    virtual std::string_view name() const noexcept = 0;
    virtual Decision decide(const PolicyState& state, Position request) const = 0;
};

class TriActPolicy final : public MigrationPolicy {
public:
    explicit TriActPolicy(const DerivedConstants& constants = canonical_constants())
        : constants_(constants) {}
    std::string_view name() const noexcept override { return "triact"; }
    Decision decide(const PolicyState& state, Position request) const override {
        return triact_decide(state, request, constants_);
    }

private:
    DerivedConstants constants_;
};

class NeverMovePolicy final : public MigrationPolicy {
public:
    std::string_view name() const noexcept override { return "never-move"; }
    Decision decide(const PolicyState& state, Position request) const override {
        return never_move_decide(state, request);
    }
};

class MoveToRequestPolicy final : public MigrationPolicy {
public:
    std::string_view name() const noexcept override { return "move-to-request"; }
    Decision decide(const PolicyState& state, Position request) const override {
        return move_to_request_decide(state, request);
    }
};

/// Names accepted by make_policy.
std::vector<std::string_view> policy_names();

/// Throws InvalidInput(field "policy") for an unknown name.
std::unique_ptr<MigrationPolicy> make_policy(std::string_view name);

struct StepRecord {
    std::size_t index;  // 1-based request number
    Position request;
    Position server_before;
    Position server_after;
    CaseLabel label;
    std::int64_t service_cost;
    std::int64_t migration_cost;
    bool near_boundary;
};

struct PolicyRun {
    Schedule schedule;
    std::vector<StepRecord> steps;
};

/// Folds the policy over the request sequence. Validates the instance first.
PolicyRun run_policy(const Instance& instance, const MigrationPolicy& policy);

}  // namespace ringmig
