// Copyright 2026 The groverlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "groverlab/cli.h"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "groverlab/adversary.h"
#include "groverlab/ancilla_bound.h"
#include "groverlab/errors.h"
#include "groverlab/gates.h"
#include "groverlab/grover.h"
#include "groverlab/random_unitary.h"

namespace groverlab {

namespace {

constexpr double kSimulationTolerance = 1e-10;
constexpr double kBoundSlack = 1e-12;
constexpr double kBranchDrift = 1e-15;

std::int64_t as_int(std::uint64_t v) {
    return static_cast<std::int64_t>(v);
}

std::string bits_of(std::uint64_t value, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int k = 0; k < width; ++k) {
        if ((value >> k) & 1) {
            s[static_cast<std::size_t>(width - 1 - k)] = '1';
        }
    }
    return s;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

std::vector<RoundSpec> parse_round_schedule(std::string_view text, std::uint64_t seed) {
    std::vector<RoundSpec> rounds;
    if (text.empty()) {
        return rounds;
    }
    std::uint64_t random_index = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view item = text.substr(pos, end - pos);
        pos = end + 1;
        item.remove_prefix(std::min(item.find_first_not_of(" \t"), item.size()));
        item.remove_suffix(item.size() - std::min(item.find_last_not_of(" \t") + 1, item.size()));
        if (item == "identity") {
            rounds.push_back(RoundSpec::identity());
        } else if (item == "hadamard") {
            rounds.push_back(RoundSpec::hadamard());
        } else if (item.starts_with("random:")) {
            std::string_view count_text = item.substr(7);
            int count = 0;
            auto [ptr, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
            if (ec != std::errc() || ptr != count_text.data() + count_text.size() || count < 1) {
                throw DomainError("bad round count in '" + std::string(item) + "'");
            }
            for (int k = 0; k < count; ++k) {
                rounds.push_back(RoundSpec::random(derive_seed(seed, random_index++)));
            }
        } else {
            throw DomainError("unknown round '" + std::string(item) + "' (expected identity, hadamard or random:<k>)");
        }
    }
    return rounds;
}

ExperimentReport grover_report(int index_width, std::uint64_t marked, std::optional<int> iterations,
                               std::uint64_t seed, std::string command) {
    if (index_width < 1 || index_width > default_qubit_cap()) {
        throw CapacityError(fmt::format("index width {} outside [1, {}]", index_width, default_qubit_cap()));
    }
    const std::uint64_t N = std::uint64_t{1} << index_width;
    if (marked >= N) {
        throw DomainError(fmt::format("marked index {} out of range for N = {}", marked, N));
    }
    const int t = iterations.value_or(optimal_iterations(N));
    auto trajectory = grover_trajectory(index_width, marked, t);
    const auto &final = trajectory.back();
    const double expected = closed_form_success(N, t);

    ExperimentReport report;
    report.command = std::move(command);
    report.seed = seed;
    report.parameters = {{"n", std::int64_t{index_width}},
                         {"d", as_int(marked)},
                         {"t", std::int64_t{t}},
                         {"t_auto", !iterations.has_value()}};
    report.results = {{"N", as_int(N)},
                      {"theta", grover_angle(N)},
                      {"optimal_iterations", std::int64_t{optimal_iterations(N)}},
                      {"success_probability", final.success_probability},
                      {"closed_form", expected},
                      {"abs_error", std::abs(final.success_probability - expected)},
                      {"queries", final.queries}};
    ReportTable curve{"curve", {"t", "simulated", "closed_form", "queries"}, {}};
    for (const auto &step : trajectory) {
        curve.rows.push_back({std::int64_t{step.iterations}, step.success_probability,
                              closed_form_success(N, step.iterations), step.queries});
    }
    report.tables.push_back(std::move(curve));
    bool matches = true;
    for (const auto &step : trajectory) {
        matches = matches &&
                  std::abs(step.success_probability - closed_form_success(N, step.iterations)) < kSimulationTolerance;
    }
    report.verdicts = {{"matches_closed_form", matches}, {"ledger_equals_iterations", final.queries == t}};
    return report;
}

ExperimentReport refute_report(int index_width, std::uint64_t marked, int ancilla_registers, std::string_view rounds,
                               std::uint64_t seed, std::string command) {
    auto schedule = parse_round_schedule(rounds, seed);
    auto prepared = prepare_marked_superposition(index_width, marked, ancilla_registers);
    const auto &layout = prepared.layout;
    const std::uint64_t N = layout.index_dimension();

    apply_copy_round(prepared.state, layout);
    StateVector after_copy = prepared.state;
    for (const auto &spec : schedule) {
        apply_round(prepared.state, layout, spec);
    }
    const double drift = flag_zero_drift(after_copy, prepared.state, layout);
    const double identification = identification_probability(index_width, ancilla_registers, schedule);
    const double reveal_bound = 1.0 / static_cast<double>(N);
    const double identification_bound = 2.0 / static_cast<double>(N);
    const int t_star = N >= 2 ? optimal_iterations(N) : 0;

    ExperimentReport report;
    report.command = std::move(command);
    report.seed = seed;
    report.parameters = {{"n", std::int64_t{index_width}},
                         {"d", as_int(marked)},
                         {"M", std::int64_t{ancilla_registers}},
                         {"rounds", std::string(rounds)},
                         {"later_rounds", static_cast<std::int64_t>(schedule.size())}};
    report.results = {{"N", as_int(N)}, {"total_qubits", std::int64_t{layout.total_qubits()}},
                      {"oracle_queries", prepared.ledger.queries()}};

    bool reveal_ok = true;
    if (ancilla_registers > 0) {
        auto reveal = ancilla_reveal_probability(prepared.state, layout, marked);
        report.results.emplace_back("reveal_probability", reveal.probability);
        report.results.emplace_back("reveal_degenerate", reveal.degenerate);
        if (reveal.degenerate) {
            report.warnings.push_back(
                "d = 0: the copied pattern equals the initial all-zeros pattern, so the reveal probability carries no "
                "information and is not checked against 1/N");
        } else {
            reveal_ok = reveal.probability <= reveal_bound + kBoundSlack;
        }
        auto index_and_flag = layout.index_qubits();
        index_and_flag.push_back(layout.flag());
        report.results.emplace_back("schmidt_rank_index_flag_vs_ancillas",
                                    std::int64_t{schmidt_rank(prepared.state, index_and_flag)});
    } else {
        report.warnings.push_back("M = 0: no ancilla register, reveal probability not applicable");
    }
    report.results.emplace_back("reveal_bound", reveal_bound);
    report.results.emplace_back("identification_probability", identification);
    report.results.emplace_back("identification_bound", identification_bound);
    report.results.emplace_back("flag_zero_drift", drift);
    report.results.emplace_back("grover_optimal_iterations", std::int64_t{t_star});
    report.results.emplace_back("grover_success_at_optimum", closed_form_success(N, t_star));

    report.verdicts = {{"reveal_within_1_over_N", reveal_ok},
                       {"identification_within_2_over_N", identification <= identification_bound + kBoundSlack},
                       {"flag_zero_branch_invariant", drift <= kBranchDrift}};
    return report;
}

ExperimentReport bound_report(int index_width, int ancilla_width, double p, std::uint64_t seed, std::string command) {
    const double real = query_count_estimate_real(index_width, ancilla_width, p);
    const double sqrt_n = std::sqrt(std::exp2(index_width));

    ExperimentReport report;
    report.command = std::move(command);
    report.seed = seed;
    report.parameters = {{"n", std::int64_t{index_width}}, {"m", std::int64_t{ancilla_width}}, {"p", p}};
    report.results = {{"estimate", as_int(query_count_estimate(index_width, ancilla_width, p))},
                      {"estimate_real", real},
                      {"sqrt_N", sqrt_n},
                      {"ratio_to_sqrt_N", real / sqrt_n}};

    ReportTable sweep{"p_sweep", {"p", "estimate_real", "estimate"}, {}};
    bool monotone = true;
    double previous = 0;
    for (int q = 0; q <= index_width + ancilla_width; ++q) {
        double value = query_count_estimate_real(index_width, ancilla_width, q);
        if (q > 0 && value > previous) {
            monotone = false;
        }
        previous = value;
        sweep.rows.push_back(
            {std::int64_t{q}, value, as_int(query_count_estimate(index_width, ancilla_width, q))});
    }
    report.tables.push_back(std::move(sweep));
    report.verdicts = {{"estimate_monotone_in_p", monotone}};
    return report;
}

namespace {

ReportTable trial_table(std::string name, const AdversaryReport &r) {
    ReportTable table{std::move(name), {"trial", "marked", "success", "queries"}, {}};
    for (std::size_t i = 0; i < r.trials.size(); ++i) {
        table.rows.push_back(
            {static_cast<std::int64_t>(i), as_int(r.trials[i].marked), r.trials[i].success, r.trials[i].queries});
    }
    return table;
}

}  // namespace

ExperimentReport adversary_report(const AdversaryConfig &config, std::string command) {
    auto result = adversarial_search(config);
    ExperimentReport report;
    report.command = std::move(command);
    report.seed = config.seed;
    report.parameters = {{"n", std::int64_t{config.index_width}},
                         {"m_extra", std::int64_t{config.extra_qubits}},
                         {"t", std::int64_t{config.queries}},
                         {"trials", std::int64_t{config.trials}},
                         {"block_qubits", std::int64_t{config.block_qubits}},
                         {"depth", std::int64_t{config.depth}}};
    report.results = {{"max_success", result.max_success},
                      {"mean_success", result.mean_success},
                      {"ceiling", result.ceiling},
                      {"grover_success", run_grover(config.index_width, 0, config.queries).success_probability}};
    report.tables.push_back(trial_table("trials", result));
    report.verdicts = {{"below_success_ceiling", result.ceiling_ok}, {"ledger_equals_queries", result.ledger_ok}};
    return report;
}

ExperimentReport adversary_compare_report(int index_width, int queries, int trials, std::uint64_t seed,
                                          std::string command) {
    auto cmp = ancilla_advantage_report(index_width, queries, trials, seed);
    ExperimentReport report;
    report.command = std::move(command);
    report.seed = seed;
    report.parameters = {{"n", std::int64_t{index_width}},
                         {"t", std::int64_t{queries}},
                         {"trials", std::int64_t{trials}},
                         {"m_extra_compared", std::int64_t{kComparisonExtraQubits}}};
    report.results = {{"ceiling", cmp.without_ancillas.ceiling},
                      {"grover_success", cmp.grover_success},
                      {"max_success_m0", cmp.without_ancillas.max_success},
                      {"mean_success_m0", cmp.without_ancillas.mean_success},
                      {"max_success_m2", cmp.with_ancillas.max_success},
                      {"mean_success_m2", cmp.with_ancillas.mean_success},
                      {"difference", cmp.difference}};
    report.tables.push_back(trial_table("trials_m0", cmp.without_ancillas));
    report.tables.push_back(trial_table("trials_m2", cmp.with_ancillas));
    report.verdicts = {{"below_success_ceiling", cmp.ceiling_ok},
                       {"ledger_equals_queries", cmp.without_ancillas.ledger_ok && cmp.with_ancillas.ledger_ok}};
    return report;
}

ExperimentReport circuit_report(const Circuit &circuit, std::string_view source, std::uint64_t seed,
                                std::string command) {
    auto run = run_circuit(circuit);
    const double norm = run.state.norm_squared();
    ExperimentReport report;
    report.command = std::move(command);
    report.seed = seed;
    report.parameters = {{"circuit", std::string(source)}};
    report.results = {{"num_qubits", std::int64_t{circuit.num_qubits}},
                      {"operations", static_cast<std::int64_t>(circuit.ops.size())},
                      {"queries", run.ledger.queries()},
                      {"norm_squared", norm}};
    ReportTable table{"probabilities", {"index", "bits", "probability"}, {}};
    for (std::size_t i = 0; i < run.state.size(); ++i) {
        double p = std::norm(run.state[i]);
        if (p > 1e-15) {
            table.rows.push_back({static_cast<std::int64_t>(i), bits_of(i, circuit.num_qubits), p});
        }
    }
    report.tables.push_back(std::move(table));
    report.verdicts = {{"norm_preserved", std::abs(norm - 1.0) < kSimulationTolerance}};
    return report;
}

int run_command(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Grover search and ancilla-scheme verification experiments", "groverlab"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tool_version()));

    std::uint64_t seed = 0;
    std::string csv_path;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--seed", seed, "RNG seed (echoed in the report)");
        sub->add_option("--csv", csv_path, "Write the report as CSV to this path instead of JSON on stdout");
    };

    int n = 0;
    std::uint64_t d = 0;
    std::string t_text = "auto";
    auto *grover = app.add_subcommand("grover", "Simulate Grover search and compare with the closed form");
    grover->add_option("--n", n, "Index register width")->required();
    grover->add_option("--d", d, "Marked index")->required();
    grover->add_option("--t", t_text, "Iterations, or 'auto' for the optimum");
    add_common(grover);

    int registers = 1;
    std::string rounds;
    auto *refute = app.add_subcommand("refute", "Run the ancilla-copy scheme and check its information bounds");
    refute->add_option("--n", n, "Index register width")->required();
    refute->add_option("--d", d, "Marked index")->required();
    refute->add_option("--M", registers, "Number of ancilla registers");
    refute->add_option("--rounds", rounds, "Later rounds: comma list of identity, hadamard, random:<k>");
    add_common(refute);

    int m = 0;
    double p = 0;
    auto *bound = app.add_subcommand("bound", "Query-count estimate with m auxiliary qubits");
    bound->add_option("--n", n, "Index register width")->required();
    bound->add_option("--m", m, "Auxiliary qubits")->required();
    bound->add_option("--p", p, "Exponent p with max overlap^2 = 2^-p")->required();
    add_common(bound);

    AdversaryConfig adv;
    bool compare = false;
    auto *adversary = app.add_subcommand("adversary", "Random-unitary search attempts against the optimal curve");
    adversary->add_option("--n", adv.index_width, "Index register width")->required();
    adversary->add_option("--m-extra", adv.extra_qubits, "Extra auxiliary qubits");
    adversary->add_option("--t", adv.queries, "Oracle queries per trial")->required();
    adversary->add_option("--trials", adv.trials, "Number of trials");
    adversary->add_option("--depth", adv.depth, "Blocks per random unitary (0 = 3*(n+m_extra))");
    adversary->add_option("--block", adv.block_qubits, "Qubits per random block");
    adversary->add_flag("--compare", compare, "Compare m_extra = 0 against m_extra = 2 under the same seed");
    add_common(adversary);

    std::string circuit_path;
    auto *run = app.add_subcommand("run", "Run a circuit file on |0...0>");
    run->add_option("--circuit", circuit_path, "Circuit file")->required();
    add_common(run);

    std::string command;
    for (std::size_t i = 0; i < args.size(); ++i) {
        command += (i ? " " : "") + args[i];
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "error: " << e.what() << "\n" << "run 'groverlab --help' for usage\n";
        return kExitUsage;
    }

    try {
        ExperimentReport report;
        if (grover->parsed()) {
            std::optional<int> t;
            if (t_text != "auto") {
                int value = -1;
                auto [ptr, ec] = std::from_chars(t_text.data(), t_text.data() + t_text.size(), value);
                if (ec != std::errc() || ptr != t_text.data() + t_text.size() || value < 0) {
                    throw DomainError("--t must be 'auto' or a non-negative integer");
                }
                t = value;
            }
            report = grover_report(n, d, t, seed, command);
        } else if (refute->parsed()) {
            report = refute_report(n, d, registers, rounds, seed, command);
        } else if (bound->parsed()) {
            report = bound_report(n, m, p, seed, command);
        } else if (adversary->parsed()) {
            if (compare) {
                report = adversary_compare_report(adv.index_width, adv.queries, adv.trials, seed, command);
            } else {
                adv.seed = seed;
                report = adversary_report(adv, command);
            }
        } else {
            auto circuit = parse_circuit(read_file(circuit_path));
            report = circuit_report(circuit, circuit_path, seed, command);
        }

        if (csv_path.empty()) {
            out << emit_report(report, ReportFormat::kJson);
        } else {
            write_report(report, ReportFormat::kCsv, csv_path);
        }
        if (!report.ok()) {
            for (const auto &[name, holds] : report.verdicts) {
                if (!holds) {
                    err << "invariant violated: " << name << "\n";
                }
            }
            return kExitInvariantViolated;
        }
        return kExitOk;
    } catch (const CapacityError &e) {
        err << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace groverlab
