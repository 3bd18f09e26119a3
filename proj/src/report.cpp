#include "ringmig/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace ringmig {

namespace {

std::int64_t require_integer(const Json& doc, const char* field) {
    if (!doc.contains(field)) throw InvalidInput(field, std::string("missing field '") + field + "'");
    const Json& value = doc.at(field);
    if (!value.is_number_integer()) {
        throw InvalidInput(field, std::string("field '") + field + "' must be an integer");
    }
    return value.get<std::int64_t>();
}

}  // namespace

Json parse_json(std::string_view text, const std::string& field) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(field, "malformed JSON: " + std::string(e.what()));
    }
}

Instance instance_from_json(const Json& doc) {
    if (!doc.is_object()) throw InvalidInput("instance", "instance must be a JSON object");
    const std::int64_t length = require_integer(doc, "L");
    std::optional<RingSize> ring;
    try {
        ring.emplace(length);
    } catch (const std::invalid_argument& e) {
        throw InvalidInput("L", e.what());
    }
    Instance instance{*ring, require_integer(doc, "s0"), {}};
    if (!doc.contains("requests")) throw InvalidInput("requests", "missing field 'requests'");
    const Json& requests = doc.at("requests");
    if (!requests.is_array()) throw InvalidInput("requests", "field 'requests' must be an array");
    instance.requests.reserve(requests.size());
    for (const Json& r : requests) {
        if (!r.is_number_integer()) {
            throw InvalidInput("requests", "field 'requests' must contain only integers");
        }
        instance.requests.push_back(r.get<std::int64_t>());
    }
    validate(instance);
    return instance;
}

Json instance_to_json(const Instance& instance) {
    Json doc;
    doc["L"] = instance.ring.length();
    doc["s0"] = instance.s0;
    doc["requests"] = instance.requests;
    return doc;
}

std::string read_text_file(const std::filesystem::path& path, const std::string& field) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput(field, "cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Instance read_instance_file(const std::filesystem::path& path) {
    return instance_from_json(parse_json(read_text_file(path, "instance"), "instance"));
}

std::vector<Position> read_schedule_file(const std::filesystem::path& path) {
    const Json doc = parse_json(read_text_file(path, "schedule"), "schedule");
    if (!doc.is_object() || !doc.contains("schedule") || !doc.at("schedule").is_array()) {
        throw InvalidInput("schedule", "schedule file must be {\"schedule\": [int...]}");
    }
    std::vector<Position> out;
    for (const Json& t : doc.at("schedule")) {
        if (!t.is_number_integer()) {
            throw InvalidInput("schedule", "field 'schedule' must contain only integers");
        }
        out.push_back(t.get<Position>());
    }
    return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidInput("output", "cannot write '" + path.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw InvalidInput("output", "cannot write '" + path.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw InvalidInput("output", "cannot write '" + path.string() + "'");
    }
}

std::string instance_digest(const Instance& instance) {
    const std::string canonical = instance_to_json(instance).dump();
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char ch : canonical) {
        hash ^= ch;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

Json constants_to_json(const DerivedConstants& c) {
    auto line = [](const Line& l) { return Json{{"slope", l.slope}, {"intercept", l.intercept}}; };
    auto point = [](const Point& p) { return Json{{"x", p.x}, {"y", p.y}}; };
    Json doc;
    doc["rho"] = c.rho;
    doc["y1"] = line(c.y1);
    doc["y2"] = line(c.y2);
    doc["y3"] = line(c.y3);
    doc["y4"] = line(c.y4);
    doc["y5"] = line(c.y5);
    doc["p"] = point(c.p);
    doc["q"] = point(c.q);
    doc["adv_sa"] = c.adv_sa;
    doc["adv_sb"] = c.adv_sb;
    return doc;
}

Json summary_to_json(const VerificationSummary& s) {
    Json doc;
    doc["epsilon"] = s.epsilon;
    doc["events"] = s.events;
    doc["delta1_violations"] = s.delta1_violations;
    doc["case_ae_violations"] = s.case_ae_violations;
    doc["case_f_low_violations"] = s.case_f_low_violations;
    doc["pair_violations"] = s.pair_violations;
    doc["grey_events"] = s.grey_events;
    doc["online_cost"] = s.online_cost;
    doc["offline_cost"] = s.offline_cost;
    doc["trailing_slack"] = s.trailing_slack;
    doc["final_event_grey"] = s.final_event_grey;
    doc["max_excess"] = s.max_excess;
    doc["global_bound_holds"] = s.global_bound_holds;
    doc["clean"] = s.clean();
    return doc;
}

Json event_to_json(const EventRecord& e) {
    Json doc;
    doc["index"] = e.index;
    doc["case"] = std::string(to_string(e.label));
    doc["x"] = e.x;
    doc["y"] = e.y;
    doc["z"] = e.z;
    doc["t_prev"] = e.t_prev;
    doc["t_cur"] = e.t_cur;
    doc["delta1"] = e.delta1;
    doc["delta2"] = e.delta2;
    doc["bound_to_request"] = e.bound_to_request;
    doc["bound_to_prev_request"] = e.bound_to_prev_request;
    doc["bound_stay"] = e.bound_stay;
    doc["grey"] = e.grey;
    doc["pair_sum"] = e.pair_sum ? Json(*e.pair_sum) : Json(nullptr);
    return doc;
}

std::string format_real(double value) {
    // nlohmann's serializer already emits the shortest round-trip form.
    return Json(value).dump();
}

std::string steps_to_csv(std::span<const StepRecord> steps) {
    std::ostringstream out;
    out << kStepCsvHeader << '\n';
    for (const StepRecord& s : steps) {
        out << s.index << ',' << s.request << ',' << s.server_before << ',' << s.server_after << ','
            << to_string(s.label) << ',' << s.service_cost << ',' << s.migration_cost << ','
            << (s.near_boundary ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string events_to_csv(std::span<const EventRecord> events) {
    std::ostringstream out;
    out << kEventCsvHeader << '\n';
    for (const EventRecord& e : events) {
        out << e.index << ',' << to_string(e.label) << ',' << e.x << ',' << e.y << ',' << e.z << ','
            << e.t_prev << ',' << e.t_cur << ',' << format_real(e.delta1) << ','
            << format_real(e.delta2) << ',' << format_real(e.bound_to_request) << ','
            << format_real(e.bound_to_prev_request) << ',' << format_real(e.bound_stay) << ','
            << (e.grey ? 1 : 0) << ',' << (e.pair_sum ? format_real(*e.pair_sum) : std::string())
            << '\n';
    }
    return out.str();
}

}  // namespace ringmig
