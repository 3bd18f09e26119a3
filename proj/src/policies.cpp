#include "ringmig/policies.hpp"

#include <cmath>
#include <string>

namespace ringmig {

std::string_view to_string(CaseLabel label) noexcept {
    switch (label) {
        case CaseLabel::A: return "A";
        case CaseLabel::B: return "B";
        case CaseLabel::C: return "C";
        case CaseLabel::D: return "D";
        case CaseLabel::E: return "E";
        case CaseLabel::F: return "F";
        case CaseLabel::None: return "n/a";
    }
    return "?";
}

CaseLabel classify_far_case(std::int64_t x, std::int64_t y, RingSize ring,
                            const DerivedConstants& constants, bool* near_boundary) {
    const double len = static_cast<double>(ring.length());
    const double fx = static_cast<double>(x);
    const double fy = static_cast<double>(y);
    const double y1 = constants.y1.at(fx, len);
    const double y2 = constants.y2.at(fx, len);
    const double y3 = constants.y3.at(fx, len);
    const double y4 = constants.y4.at(fx, len);

    if (near_boundary != nullptr) {
        const double band = 1e-6 * len;
        *near_boundary = std::abs(fy - y1) <= band || std::abs(fy - y2) <= band ||
                         std::abs(fy - y3) <= band || std::abs(fy - y4) <= band;
    }
    if (fy >= y1 && fy >= y2) return CaseLabel::D;
    if (fy <= y3 && fy >= y4) return CaseLabel::E;
    return CaseLabel::F;
}

namespace {

Decision make_decision(const PolicyState& state, Position request, Position target,
                       CaseLabel label, bool near_boundary = false) {
    return Decision{target, label, dist(state.ring, state.server, request),
                    dist(state.ring, state.server, target), near_boundary};
}

}  // namespace

Decision triact_decide(const PolicyState& state, Position request,
                       const DerivedConstants& constants) {
    const TripleRelation rel = classify_triple(state.ring, state.server, state.prev_request, request);
    switch (rel.variant) {
        case TripleVariant::ZeqXminusY:
            return make_decision(state, request, request, CaseLabel::A);
        case TripleVariant::ZeqYminusX:
            return make_decision(state, request, state.prev_request, CaseLabel::B);
        case TripleVariant::ZeqXplusY:
            return make_decision(state, request, state.server, CaseLabel::C);
        case TripleVariant::SumEqualsL:
            break;
    }
    bool near = false;
    const CaseLabel label = classify_far_case(rel.x, rel.y, state.ring, constants, &near);
    switch (label) {
        case CaseLabel::D: return make_decision(state, request, state.prev_request, label, near);
        case CaseLabel::E: return make_decision(state, request, request, label, near);
        default: return make_decision(state, request, state.server, CaseLabel::F, near);
    }
}

Decision never_move_decide(const PolicyState& state, Position request) {
    return make_decision(state, request, state.server, CaseLabel::None);
}

Decision move_to_request_decide(const PolicyState& state, Position request) {
    return make_decision(state, request, request, CaseLabel::None);
}

std::vector<std::string_view> policy_names() {
    return {"triact", "never-move", "move-to-request"};
}

std::unique_ptr<MigrationPolicy> make_policy(std::string_view name) {
    if (name == "triact") return std::make_unique<TriActPolicy>();
    if (name == "never-move") return std::make_unique<NeverMovePolicy>();
    if (name == "move-to-request") return std::make_unique<MoveToRequestPolicy>();
    throw InvalidInput("policy", "unknown policy '" + std::string(name) +
                                     "' (expected triact, never-move or move-to-request)");
}

PolicyRun run_policy(const Instance& instance, const MigrationPolicy& policy) {
    validate(instance);
    PolicyRun run;
    run.schedule.servers.reserve(instance.requests.size() + 1);
    run.schedule.servers.push_back(instance.s0);
    run.steps.reserve(instance.requests.size());

    PolicyState state = PolicyState::initial(instance.ring, instance.s0);
    for (std::size_t i = 0; i < instance.requests.size(); ++i) {
        const Position request = instance.requests[i];
        const Decision d = policy.decide(state, request);
        run.steps.push_back(StepRecord{i + 1, request, state.server, d.new_server, d.label,
                                       d.service_cost, d.migration_cost, d.near_boundary});
        run.schedule.total_cost += d.service_cost + d.migration_cost;
        run.schedule.servers.push_back(d.new_server);
        state.server = d.new_server;
        state.prev_request = request;
    }
    return run;
}

}  // namespace ringmig
