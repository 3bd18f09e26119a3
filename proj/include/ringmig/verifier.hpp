#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ringmig/constants.hpp"
#include "ringmig/instance.hpp"
#include "ringmig/policies.hpp"
#include "ringmig/ring.hpp"

namespace ringmig {

/// Phi(s, r, t) = rho/2 * (d(s,t) + d(r,t)) + (rho/2 - 1) * d(s,r), where s
/// is the online server, r the latest request and t the offline server.
double potential(RingSize ring, Position s, Position r, Position t, double rho);

/// Offline-migration event t_prev -> t_cur with the online side fixed at
/// (s, r). Never positive.
double delta1(RingSize ring, Position s, Position r, Position t_prev, Position t_cur, double rho);

/// Service/online-migration event: the request r_cur is served from s_prev,
/// the online server moves to s_cur, the offline server stays at t.
double delta2(RingSize ring, Position s_prev, Position r_prev, Position r_cur, Position s_cur,
              Position t, double rho);

enum class OnlineAction { ToRequest, ToPrevRequest, Stay };

OnlineAction action_for(CaseLabel label);

/// Closed-form upper bound on delta2 for an action, valid for every offline
/// position t. Throws std::invalid_argument if (x, y, z) are not the
/// pairwise distances of some three points on the ring.
double delta2_upper_bound(OnlineAction action, std::int64_t x, std::int64_t y, std::int64_t z,
                          RingSize ring, double rho);

/// Case F point above y5: the single-event bound is positive here and the
/// event is paired with its successor. Expects x + y + z = L.
bool grey_region(std::int64_t x, std::int64_t y, RingSize ring, const DerivedConstants& constants);

struct EventRecord {
    std::size_t index;  // 1-based request number
    CaseLabel label;
    std::int64_t x, y, z;
    Position t_prev, t_cur;
    double delta1;
    double delta2;
    double bound_to_request;
    double bound_to_prev_request;
    double bound_stay;
    bool grey;
    std::optional<double> pair_sum;  // delta2 + delta2' for non-final grey events
};

struct VerificationSummary {
    double epsilon = 0.0;
    std::size_t events = 0;
    std::size_t delta1_violations = 0;      // delta1 > eps
    std::size_t case_ae_violations = 0;     // delta2 > eps in cases A..E
    std::size_t pair_violations = 0;        // delta2 + delta2' > eps, grey non-final
    std::size_t case_f_low_violations = 0;  // delta2 > eps in case F with y <= y5
    std::size_t grey_events = 0;
    std::int64_t online_cost = 0;
    std::int64_t offline_cost = 0;
    double trailing_slack = 0.0;  // positive delta2 of an unpaired final grey event
    bool final_event_grey = false;
    double max_excess = 0.0;  // largest positive value among the checked quantities
    bool global_bound_holds = false;

    bool clean() const noexcept {
        return delta1_violations == 0 && case_ae_violations == 0 && pair_violations == 0 &&
               case_f_low_violations == 0 && global_bound_holds;
    }
};

struct VerificationReport {
    std::vector<EventRecord> events;
    VerificationSummary summary;
};

/// Replays a TriAct run against an offline schedule t_0..t_n (t_0 = s_0)
/// event by event and checks each inequality of the potential argument,
/// with tolerance eps = 1e-6 * L. The global check is
///   online <= rho * offline + trailing_slack + eps * n.
/// Throws InvalidInput when the ledger or schedule does not belong to the
/// instance, or the ledger is not a TriAct run.
VerificationReport verify_run(const Instance& instance, std::span<const StepRecord> online,
                              std::span<const Position> offline,
                              const DerivedConstants& constants);

}  // namespace ringmig
