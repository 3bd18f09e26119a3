#include "ringmig/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <iostream>
#include <sstream>

#include "ringmig/policies.hpp"
#include "ringmig/workloads.hpp"

namespace ringmig::cli {

namespace {

Json ratio_or_null(std::int64_t cost, std::optional<std::int64_t> opt) {
    if (!opt || *opt <= 0) return nullptr;
    return static_cast<double>(cost) / static_cast<double>(*opt);
}

Json case_counts(std::span<const StepRecord> steps) {
    std::array<std::int64_t, 7> counts{};
    for (const StepRecord& s : steps) ++counts[static_cast<std::size_t>(s.label)];
    Json doc;
    for (CaseLabel label : {CaseLabel::A, CaseLabel::B, CaseLabel::C, CaseLabel::D, CaseLabel::E,
                            CaseLabel::F, CaseLabel::None}) {
        doc[std::string(to_string(label))] = counts[static_cast<std::size_t>(label)];
    }
    return doc;
}

std::optional<Schedule> opt_within_budget(const Instance& instance, DpBudget budget) {
    try {
        return opt_cost(instance, budget);
    } catch (const BudgetExceeded&) {
        return std::nullopt;
    }
}

}  // namespace

Json cmd_rho() {
    const Rho rho = solve_rho();
    const DerivedConstants constants = derive_constants(rho);
    Json doc;
    doc["rho"] = rho.value;
    doc["residual"] = ratio_quartic(rho.value);
    doc["lambda"] = closed_form_lambda();
    doc["closed_form_rho"] = closed_form_rho();
    doc["constants"] = constants_to_json(constants);
    return doc;
}

Json cmd_simulate(const Instance& instance, const std::string& policy_name, DpBudget budget,
                  std::vector<StepRecord>* steps_out) {
    const auto policy = make_policy(policy_name);
    const DerivedConstants& constants = canonical_constants();
    PolicyRun run = run_policy(instance, *policy);
    const std::optional<Schedule> opt = opt_within_budget(instance, budget);

    std::int64_t service = 0;
    std::int64_t migration = 0;
    std::int64_t near = 0;
    for (const StepRecord& s : run.steps) {
        service += s.service_cost;
        migration += s.migration_cost;
        near += s.near_boundary ? 1 : 0;
    }

    Json doc;
    doc["instance_digest"] = instance_digest(instance);
    doc["L"] = instance.ring.length();
    doc["s0"] = instance.s0;
    doc["m"] = instance.requests.size();
    doc["policy"] = policy_name;
    doc["cost"] = run.schedule.total_cost;
    doc["service_cost"] = service;
    doc["migration_cost"] = migration;
    doc["case_counts"] = case_counts(run.steps);
    doc["near_boundary_steps"] = near;
    doc["opt_cost"] = opt ? Json(opt->total_cost) : Json(nullptr);
    doc["ratio"] = ratio_or_null(run.schedule.total_cost,
                                 opt ? std::optional(opt->total_cost) : std::nullopt);
    if (opt && policy_name == "triact") {
        doc["verification"] =
            summary_to_json(verify_run(instance, run.steps, opt->servers, constants).summary);
    } else {
        doc["verification"] = nullptr;
    }
    doc["rho"] = constants.rho;
    doc["constants"] = constants_to_json(constants);
    if (steps_out != nullptr) *steps_out = std::move(run.steps);
    return doc;
}

Json cmd_opt(const Instance& instance, DpBudget budget) {
    const Schedule opt = opt_cost(instance, budget);
    Json doc;
    doc["instance_digest"] = instance_digest(instance);
    doc["cost"] = opt.total_cost;
    doc["schedule"] = opt.servers;
    return doc;
}

Json cmd_verify(const Instance& instance, const std::optional<std::vector<Position>>& offline,
                DpBudget budget, std::vector<EventRecord>* events_out) {
    const DerivedConstants& constants = canonical_constants();
    const PolicyRun run = run_policy(instance, TriActPolicy(constants));
    std::vector<Position> schedule;
    std::string source;
    if (offline) {
        schedule = *offline;
        source = "user";
    } else {
        schedule = opt_cost(instance, budget).servers;
        source = "opt";
    }
    VerificationReport report = verify_run(instance, run.steps, schedule, constants);

    Json doc;
    doc["instance_digest"] = instance_digest(instance);
    doc["rho"] = constants.rho;
    doc["offline_source"] = source;
    doc["summary"] = summary_to_json(report.summary);
    Json events = Json::array();
    for (const EventRecord& e : report.events) events.push_back(event_to_json(e));
    doc["events"] = std::move(events);
    if (events_out != nullptr) *events_out = std::move(report.events);
    return doc;
}

Json cmd_lowerbound(std::int64_t ring_length, std::int64_t periods, bool skip_opt, DpBudget budget) {
    RingSize ring{1'000'000};
    try {
        ring = RingSize(ring_length);
    } catch (const std::invalid_argument& e) {
        throw InvalidInput("L", e.what());
    }
    if (ring_length < kMinAdversaryRing) {
        throw InvalidInput("L", "lowerbound needs L >= " + std::to_string(kMinAdversaryRing));
    }
    if (periods < 1) throw InvalidInput("periods", "periods must be positive");

    const DerivedConstants& constants = canonical_constants();
    const AdversaryLayout layout = adversary_layout(ring, constants);
    const Instance instance = theorem2_instance(ring, periods, constants);
    const PolicyRun run = run_policy(instance, TriActPolicy(constants));

    bool trace_ok = true;
    constexpr std::array<CaseLabel, 4> pattern{CaseLabel::B, CaseLabel::E, CaseLabel::B, CaseLabel::E};
    for (std::size_t i = 0; i < run.steps.size(); ++i) {
        trace_ok = trace_ok && run.steps[i].label == pattern[i % 4];
    }
    const std::int64_t reference = reference_offline_cost(ring, periods, constants);
    const std::vector<Position> ref_schedule = reference_offline_schedule(ring, periods, constants);
    const std::int64_t ref_schedule_cost =
        schedule_cost(instance, std::span(ref_schedule).subspan(1));

    std::optional<Schedule> opt;
    std::string opt_status = "skipped";
    if (!skip_opt) {
        opt = opt_within_budget(instance, budget);
        opt_status = opt ? "computed" : "over_budget";
    }

    Json doc;
    doc["L"] = ring.length();
    doc["periods"] = periods;
    doc["rho"] = constants.rho;
    doc["layout"] = {{"s", layout.s},       {"a", layout.a},       {"b", layout.b},
                     {"c", layout.c},       {"d_sa", layout.d_sa}, {"d_sb", layout.d_sb}};
    doc["triact_cost"] = run.schedule.total_cost;
    doc["case_trace_ok"] = trace_ok;
    doc["reference_cost"] = reference;
    doc["ratio_reference"] = ratio_or_null(run.schedule.total_cost, reference);
    doc["ratio_reference_per_period"] =
        static_cast<double>(2 * layout.d_sa + 4 * layout.d_sb) / static_cast<double>(2 * layout.d_sa);
    doc["reference_schedule_cost"] = ref_schedule_cost;
    doc["opt_status"] = opt_status;
    doc["opt_cost"] = opt ? Json(opt->total_cost) : Json(nullptr);
    doc["ratio_opt"] = opt ? ratio_or_null(run.schedule.total_cost, opt->total_cost) : Json(nullptr);
    return doc;
}

namespace {

std::vector<std::int64_t> integer_list(const Json& config, const char* field) {
    if (!config.contains(field) || !config.at(field).is_array()) {
        throw InvalidInput(field, std::string("field '") + field + "' must be an array of integers");
    }
    std::vector<std::int64_t> out;
    for (const Json& v : config.at(field)) {
        if (!v.is_number_integer()) {
            throw InvalidInput(field, std::string("field '") + field + "' must contain only integers");
        }
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

struct SweepRow {
    std::string line;
};

}  // namespace

std::string cmd_sweep(const Json& config, DpBudget budget, Execution exec) {
    if (!config.is_object()) throw InvalidInput("config", "sweep config must be a JSON object");
    const std::vector<std::int64_t> lengths = integer_list(config, "L");
    const std::vector<std::int64_t> sizes = integer_list(config, "m");
    const std::vector<std::int64_t> seeds = integer_list(config, "seeds");
    if (!config.contains("policies") || !config.at("policies").is_array()) {
        throw InvalidInput("policies", "field 'policies' must be an array of policy names");
    }
    std::vector<std::string> policies;
    for (const Json& p : config.at("policies")) {
        if (!p.is_string()) throw InvalidInput("policies", "policy names must be strings");
        policies.push_back(p.get<std::string>());
        make_policy(policies.back());
    }
    if (policies.empty()) throw InvalidInput("policies", "policy list is empty");

    std::string workload = "random";
    if (config.contains("workload")) {
        if (!config.at("workload").is_string()) throw InvalidInput("workload", "workload must be a string");
        workload = config.at("workload").get<std::string>();
    }
    if (workload != "random" && workload != "walk") {
        throw InvalidInput("workload", "workload must be 'random' or 'walk'");
    }
    std::int64_t step_bound = 1;
    if (config.contains("step_bound")) {
        if (!config.at("step_bound").is_number_integer()) {
            throw InvalidInput("step_bound", "step_bound must be an integer");
        }
        step_bound = config.at("step_bound").get<std::int64_t>();
    }

    struct Job {
        std::int64_t length, m, seed;
    };
    std::vector<Job> jobs;
    std::int64_t total_cells = 0;
    for (std::int64_t length : lengths) {
        try {
            RingSize{length};
        } catch (const std::invalid_argument& e) {
            throw InvalidInput("L", e.what());
        }
        for (std::int64_t m : sizes) {
            if (m < 0) throw InvalidInput("m", "request counts must be non-negative");
            for (std::int64_t seed : seeds) {
                jobs.push_back({length, m, seed});
                total_cells += length * m;
            }
        }
    }
    const std::int64_t sweep_limit = 64 * budget.max_cells;
    if (total_cells > sweep_limit) {
        throw BudgetExceeded("sweep needs " + std::to_string(total_cells) +
                             " DP cells in total, limit is " + std::to_string(sweep_limit));
    }

    const DerivedConstants& constants = canonical_constants();
    const auto rows = map_indexed(
        jobs.size(),
        [&](std::size_t j) {
            const Job& job = jobs[j];
            const RingSize ring{job.length};
            const auto seed = static_cast<std::uint64_t>(job.seed);
            const Instance instance = workload == "walk"
                                          ? walk_instance(ring, job.m, step_bound, seed)
                                          : random_instance(ring, job.m, seed);
            const Schedule opt = opt_cost(instance, budget);
            std::ostringstream out;
            for (const std::string& name : policies) {
                const auto policy = make_policy(name);
                const PolicyRun run = run_policy(instance, *policy);
                out << job.length << ',' << job.m << ',' << job.seed << ',' << workload << ','
                    << name << ',' << run.schedule.total_cost << ',' << opt.total_cost << ',';
                if (opt.total_cost > 0) {
                    out << format_real(static_cast<double>(run.schedule.total_cost) /
                                       static_cast<double>(opt.total_cost));
                }
                out << ',';
                if (name == "triact") {
                    const VerificationSummary s =
                        verify_run(instance, run.steps, opt.servers, constants).summary;
                    out << format_real(s.max_excess) << ',' << format_real(s.trailing_slack) << ','
                        << (s.global_bound_holds ? 1 : 0);
                } else {
                    out << ",,";
                }
                out << '\n';
            }
            return SweepRow{out.str()};
        },
        exec);

    std::string csv(kSweepCsvHeader);
    csv += '\n';
    for (const SweepRow& row : rows) csv += row.line;
    return csv;
}

namespace {

void emit(std::ostream& out, const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        out << content;
    } else {
        write_file_atomic(path, content);
    }
}

std::string error_line(const std::string& message, const std::string& field) {
    return Json{{"error", message}, {"field", field}}.dump() + "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Online page migration on ring networks (page size 1): TriAct simulation, "
                 "offline optimum, lower-bound adversary and potential-function verification."};
    app.require_subcommand(1);
    app.footer(std::string("Environment:\n  ") + DpBudget::kEnvVar +
               "  maximum L*m cells for the offline DP (default " +
               std::to_string(DpBudget::kDefaultCells) + ")\n");

    std::string instance_path;
    std::string output_path;
    std::string csv_path;
    std::string policy = "triact";
    std::string schedule_path;
    std::string kind = "random";
    std::int64_t ring_length = 1'000'000;
    std::int64_t m = 0;
    std::int64_t periods = 1000;
    std::int64_t step_bound = 1;
    std::uint64_t seed = 1;
    bool skip_opt = false;
    bool serial = false;

    auto* rho_cmd = app.add_subcommand("rho", "Print rho, the quartic residual and the derived constants as JSON");

    auto* gen_cmd = app.add_subcommand("gen", "Write an instance file {\"L\", \"s0\", \"requests\"}");
    gen_cmd->add_option("--kind", kind, "random | walk | theorem2")->capture_default_str();
    gen_cmd->add_option("--L", ring_length, "ring length (even, >= 4)")->required();
    gen_cmd->add_option("--m", m, "number of requests (random, walk)");
    gen_cmd->add_option("--periods", periods, "adversary periods (theorem2)")->capture_default_str();
    gen_cmd->add_option("--step-bound", step_bound, "max step between requests (walk)")->capture_default_str();
    gen_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
    gen_cmd->add_option("-o,--output", output_path, "output file (default stdout)");

    auto* sim_cmd = app.add_subcommand("simulate", "Run a policy on an instance and write a JSON report");
    sim_cmd->add_option("instance", instance_path, "instance file")->required();
    sim_cmd->add_option("--policy", policy, "triact | never-move | move-to-request")->capture_default_str();
    sim_cmd->add_option("-o,--output", output_path, "report file (default stdout)");
    sim_cmd->add_option("--csv", csv_path, "step ledger CSV; columns: " + std::string(kStepCsvHeader));

    auto* opt_cmd = app.add_subcommand("opt", "Print the optimal offline cost and schedule as JSON");
    opt_cmd->add_option("instance", instance_path, "instance file")->required();
    opt_cmd->add_option("-o,--output", output_path, "output file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "Check every potential-function inequality on a TriAct run");
    verify_cmd->add_option("instance", instance_path, "instance file")->required();
    verify_cmd->add_option("--schedule", schedule_path,
                           "offline schedule file {\"schedule\": [t_0..t_n]} (default: optimal)");
    verify_cmd->add_option("-o,--output", output_path, "report file (default stdout)");
    verify_cmd->add_option("--csv", csv_path, "per-event CSV; columns: " + std::string(kEventCsvHeader));

    auto* lb_cmd = app.add_subcommand("lowerbound", "Run TriAct on the four-node adversary and report cost ratios");
    lb_cmd->add_option("--L", ring_length, "ring length (even, >= 10000)")->capture_default_str();
    lb_cmd->add_option("--periods", periods, "number of 4-request periods")->capture_default_str();
    lb_cmd->add_flag("--skip-opt", skip_opt, "do not run the offline DP");
    lb_cmd->add_option("-o,--output", output_path, "report file (default stdout)");

    auto* sweep_cmd = app.add_subcommand(
        "sweep", "Run policies over a grid of random instances; CSV columns: " + std::string(kSweepCsvHeader));
    sweep_cmd->add_option("config", instance_path,
                          "config {\"L\": [..], \"m\": [..], \"seeds\": [..], \"policies\": [..], "
                          "\"workload\": \"random\"|\"walk\", \"step_bound\": int}")
        ->required();
    sweep_cmd->add_flag("--serial", serial, "evaluate rows on one thread");
    sweep_cmd->add_option("-o,--output", output_path, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << error_line(e.what(), "args");
        return 2;
    }

    try {
        const DpBudget budget = DpBudget::from_env();
        if (rho_cmd->parsed()) {
            out << cmd_rho().dump(2) << '\n';
        } else if (gen_cmd->parsed()) {
            RingSize ring{4};
            try {
                ring = RingSize(ring_length);
            } catch (const std::invalid_argument& e) {
                throw InvalidInput("L", e.what());
            }
            Instance instance{ring, 0, {}};
            if (kind == "random") {
                instance = random_instance(ring, m, seed);
            } else if (kind == "walk") {
                try {
                    instance = walk_instance(ring, m, step_bound, seed);
                } catch (const std::invalid_argument& e) {
                    throw InvalidInput("step-bound", e.what());
                }
            } else if (kind == "theorem2") {
                try {
                    instance = theorem2_instance(ring, periods, canonical_constants());
                } catch (const std::invalid_argument& e) {
                    throw InvalidInput("L", e.what());
                }
            } else {
                throw InvalidInput("kind", "unknown instance kind '" + kind + "'");
            }
            emit(out, output_path, instance_to_json(instance).dump() + "\n");
        } else if (sim_cmd->parsed()) {
            make_policy(policy);
            const Instance instance = read_instance_file(instance_path);
            std::vector<StepRecord> steps;
            const Json report = cmd_simulate(instance, policy, budget, &steps);
            if (!csv_path.empty()) write_file_atomic(csv_path, steps_to_csv(steps));
            emit(out, output_path, report.dump(2) + "\n");
        } else if (opt_cmd->parsed()) {
            const Instance instance = read_instance_file(instance_path);
            emit(out, output_path, cmd_opt(instance, budget).dump(2) + "\n");
        } else if (verify_cmd->parsed()) {
            const Instance instance = read_instance_file(instance_path);
            std::optional<std::vector<Position>> schedule;
            if (!schedule_path.empty()) schedule = read_schedule_file(schedule_path);
            std::vector<EventRecord> events;
            const Json report = cmd_verify(instance, schedule, budget, &events);
            if (!csv_path.empty()) write_file_atomic(csv_path, events_to_csv(events));
            emit(out, output_path, report.dump(2) + "\n");
        } else if (lb_cmd->parsed()) {
            emit(out, output_path, cmd_lowerbound(ring_length, periods, skip_opt, budget).dump(2) + "\n");
        } else if (sweep_cmd->parsed()) {
            const Json config = parse_json(read_text_file(instance_path, "config"), "config");
            emit(out, output_path,
                 cmd_sweep(config, budget, serial ? Execution::Serial : Execution::Parallel));
        }
    } catch (const InvalidInput& e) {
        err << error_line(e.what(), e.field());
        return 1;
    } catch (const BudgetExceeded& e) {
        err << error_line(e.what(), "budget");
        return 3;
    } catch (const std::exception& e) {
        err << error_line(e.what(), "internal");
        return 1;
    }
    return 0;
}

}  // namespace ringmig::cli
