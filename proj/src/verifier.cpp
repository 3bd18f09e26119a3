#include "ringmig/verifier.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ringmig {

double potential(RingSize ring, Position s, Position r, Position t, double rho) {
    const double half = rho / 2.0;
    return half * static_cast<double>(dist(ring, s, t) + dist(ring, r, t)) +
           (half - 1.0) * static_cast<double>(dist(ring, s, r));
}

double delta1(RingSize ring, Position s, Position r, Position t_prev, Position t_cur, double rho) {
    return potential(ring, s, r, t_cur, rho) - potential(ring, s, r, t_prev, rho) -
           rho * static_cast<double>(dist(ring, t_prev, t_cur));
}

double delta2(RingSize ring, Position s_prev, Position r_prev, Position r_cur, Position s_cur,
              Position t, double rho) {
    const auto online = static_cast<double>(dist(ring, s_prev, r_cur) + dist(ring, s_prev, s_cur));
    return online + potential(ring, s_cur, r_cur, t, rho) - potential(ring, s_prev, r_prev, t, rho) -
           rho * static_cast<double>(dist(ring, t, r_cur));
}

OnlineAction action_for(CaseLabel label) {
    switch (label) {
        case CaseLabel::A:
        case CaseLabel::E: return OnlineAction::ToRequest;
        case CaseLabel::B:
        case CaseLabel::D: return OnlineAction::ToPrevRequest;
        case CaseLabel::C:
        case CaseLabel::F: return OnlineAction::Stay;
        case CaseLabel::None: break;
    }
    throw std::invalid_argument("action_for: label has no TriAct action");
}

double delta2_upper_bound(OnlineAction action, std::int64_t x, std::int64_t y, std::int64_t z,
                          RingSize ring, double rho) {
    const auto in_range = [&](std::int64_t d) { return d >= 0 && d <= ring.half(); };
    const bool realizable = in_range(x) && in_range(y) && in_range(z) &&
                            (relation_holds(TripleVariant::ZeqXminusY, x, y, z, ring) ||
                             relation_holds(TripleVariant::ZeqYminusX, x, y, z, ring) ||
                             relation_holds(TripleVariant::ZeqXplusY, x, y, z, ring) ||
                             relation_holds(TripleVariant::SumEqualsL, x, y, z, ring));
    if (!realizable) {
        throw std::invalid_argument("delta2_upper_bound: (" + std::to_string(x) + ", " +
                                    std::to_string(y) + ", " + std::to_string(z) +
                                    ") are not the distances of three ring points");
    }
    const double fx = static_cast<double>(x);
    const double fy = static_cast<double>(y);
    const double fz = static_cast<double>(z);
    const double half = rho / 2.0;
    switch (action) {
        case OnlineAction::ToRequest: return (1.0 - rho) * fx + 2.0 * fy;
        case OnlineAction::ToPrevRequest: return (2.0 - half) * fx + (1.0 - half) * fy + (half - 1.0) * fz;
        case OnlineAction::Stay: return (1.0 - half) * fx + half * fy - half * fz;
    }
    return 0.0;
}

bool grey_region(std::int64_t x, std::int64_t y, RingSize ring, const DerivedConstants& constants) {
    if (classify_far_case(x, y, ring, constants) != CaseLabel::F) return false;
    const double len = static_cast<double>(ring.length());
    return static_cast<double>(y) > constants.y5.at(static_cast<double>(x), len);
}

VerificationReport verify_run(const Instance& instance, std::span<const StepRecord> online,
                              std::span<const Position> offline,
                              const DerivedConstants& constants) {
    validate(instance);
    const RingSize ring = instance.ring;
    const std::size_t n = instance.requests.size();
    if (online.size() != n) {
        throw InvalidInput("ledger", "online ledger has " + std::to_string(online.size()) +
                                         " steps for " + std::to_string(n) + " requests");
    }
    if (offline.size() != n + 1) {
        throw InvalidInput("schedule", "offline schedule needs " + std::to_string(n + 1) +
                                           " positions (t_0..t_n), got " +
                                           std::to_string(offline.size()));
    }
    if (offline[0] != instance.s0) {
        throw InvalidInput("schedule", "offline schedule must start at s0");
    }
    for (Position t : offline) {
        if (!ring.contains(t)) throw InvalidInput("schedule", "offline position off the ring");
    }

    const double rho = constants.rho;
    const double eps = 1e-6 * static_cast<double>(ring.length());
    VerificationReport report;
    VerificationSummary& sum = report.summary;
    sum.epsilon = eps;
    sum.events = n;
    report.events.reserve(n);

    PolicyState state = PolicyState::initial(ring, instance.s0);
    for (std::size_t i = 0; i < n; ++i) {
        const StepRecord& step = online[i];
        const Position r = instance.requests[i];
        if (step.request != r || step.server_before != state.server) {
            throw InvalidInput("ledger", "ledger step " + std::to_string(i + 1) +
                                             " does not match the instance");
        }
        const Decision d = triact_decide(state, r, constants);
        if (d.label != step.label || d.new_server != step.server_after) {
            throw InvalidInput("ledger", "ledger step " + std::to_string(i + 1) +
                                             " is not a TriAct decision");
        }

        EventRecord ev{};
        ev.index = i + 1;
        ev.label = step.label;
        ev.x = dist(ring, state.server, state.prev_request);
        ev.y = dist(ring, state.server, r);
        ev.z = dist(ring, state.prev_request, r);
        ev.t_prev = offline[i];
        ev.t_cur = offline[i + 1];
        ev.delta2 = delta2(ring, state.server, state.prev_request, r, step.server_after, ev.t_prev, rho);
        ev.delta1 = delta1(ring, step.server_after, r, ev.t_prev, ev.t_cur, rho);
        ev.bound_to_request = delta2_upper_bound(OnlineAction::ToRequest, ev.x, ev.y, ev.z, ring, rho);
        ev.bound_to_prev_request =
            delta2_upper_bound(OnlineAction::ToPrevRequest, ev.x, ev.y, ev.z, ring, rho);
        ev.bound_stay = delta2_upper_bound(OnlineAction::Stay, ev.x, ev.y, ev.z, ring, rho);
        ev.grey = ev.label == CaseLabel::F && grey_region(ev.x, ev.y, ring, constants);
        report.events.push_back(ev);

        sum.online_cost += step.service_cost + step.migration_cost;
        sum.offline_cost += dist(ring, ev.t_prev, r) + dist(ring, ev.t_prev, ev.t_cur);
        state.server = step.server_after;
        state.prev_request = r;
    }

    auto note = [&](double value, std::size_t& counter) {
        sum.max_excess = std::max(sum.max_excess, value);
        if (value > eps) ++counter;
    };

    bool consumed = false;
    for (std::size_t i = 0; i < n; ++i) {
        EventRecord& ev = report.events[i];
        note(ev.delta1, sum.delta1_violations);
        if (ev.grey) {
            ++sum.grey_events;
            if (i + 1 < n) {
                ev.pair_sum = ev.delta2 + report.events[i + 1].delta2;
                note(*ev.pair_sum, sum.pair_violations);
            }
        } else if (ev.label == CaseLabel::F) {
            note(ev.delta2, sum.case_f_low_violations);
        } else {
            note(ev.delta2, sum.case_ae_violations);
        }

        // Left-to-right pairing for the global sum: a grey event absorbs its
        // successor; an unpaired grey event at the end contributes slack.
        if (consumed) {
            consumed = false;
        } else if (ev.grey) {
            if (i + 1 < n) {
                consumed = true;
            } else {
                sum.trailing_slack = std::max(0.0, ev.delta2);
            }
        }
    }
    sum.final_event_grey = n > 0 && report.events.back().grey;
    sum.global_bound_holds = static_cast<double>(sum.online_cost) <=
                             rho * static_cast<double>(sum.offline_cost) + sum.trailing_slack +
                                 eps * static_cast<double>(n);
    return report;
}

}  // namespace ringmig
