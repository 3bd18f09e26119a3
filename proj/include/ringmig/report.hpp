#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ringmig/constants.hpp"
#include "ringmig/instance.hpp"
#include "ringmig/policies.hpp"
#include "ringmig/verifier.hpp"

namespace ringmig {

using Json = nlohmann::ordered_json;

/// Parses {"L": int, "s0": int, "requests": [int...]}. Throws InvalidInput
/// naming the offending field.
Instance instance_from_json(const Json& doc);
Json instance_to_json(const Instance& instance);

/// Parses JSON text; syntax errors become InvalidInput with `field`.
Json parse_json(std::string_view text, const std::string& field);

Instance read_instance_file(const std::filesystem::path& path);

/// Offline schedule file: {"schedule": [t_0, ..., t_n]}.
std::vector<Position> read_schedule_file(const std::filesystem::path& path);

/// Reads a whole file; throws InvalidInput(field) if unreadable.
std::string read_text_file(const std::filesystem::path& path, const std::string& field);

/// Writes to a sibling temporary and renames it into place, so readers
/// never see a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// FNV-1a 64 of the canonical instance JSON, as 16 hex digits.
std::string instance_digest(const Instance& instance);

Json constants_to_json(const DerivedConstants& constants);
Json summary_to_json(const VerificationSummary& summary);
Json event_to_json(const EventRecord& event);

inline constexpr std::string_view kStepCsvHeader =
    "index,request,server_before,server_after,case,service_cost,migration_cost,near_boundary";
inline constexpr std::string_view kEventCsvHeader =
    "index,case,x,y,z,t_prev,t_cur,delta1,delta2,bound_to_request,bound_to_prev_request,"
    "bound_stay,grey,pair_sum";

std::string steps_to_csv(std::span<const StepRecord> steps);
std::string events_to_csv(std::span<const EventRecord> events);

/// Shortest round-trip formatting used for every real in CSV output.
std::string format_real(double value);

}  // namespace ringmig
