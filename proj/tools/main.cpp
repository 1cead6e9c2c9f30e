#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "delib/experiments.hpp"
#include "delib/io.hpp"

namespace {

using namespace delib;

void apply_space_flag(SimulationConfig& config, const std::string& value) {
    if (value == "line") {
        config.space_kind = SpaceKind::Line;
    } else if (value == "hypercube") {
        config.space_kind = SpaceKind::Hypercube;
    } else if (value == "star") {
        config.space_kind = SpaceKind::Star;
    } else if (value.rfind("graph:", 0) == 0) {
        config.space_kind = SpaceKind::GeneralGraph;
        config.graph_path = value.substr(6);
    } else {
        throw std::invalid_argument("--space: expected line|hypercube|star|graph:<path>");
    }
}

Mechanism parse_mechanism(const std::string& value) {
    if (value == "nash") return Mechanism::Nash;
    if (value == "selfish") return Mechanism::Selfish;
    if (value == "unselfish") return Mechanism::Unselfish;
    if (value == "dictator") return Mechanism::Dictator;
    if (value == "median3") return Mechanism::OneShotMedian3;
    throw std::invalid_argument(
        "--scheme: expected nash|selfish|unselfish|dictator|median3");
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

void print_summary(const DistortionReport& report) {
    std::printf("mean_final_distortion %.6f\n", report.mean);
    std::printf("q1_final %.6f\n", report.q1);
    std::printf("q3_final %.6f\n", report.q3);
    std::printf("second_moment %.6f\n", report.second_moment);
    std::printf("infinite_runs %d\n", report.infinite_count);
    std::printf("mean_step1 %.6f\n", report.per_step_mean.front());
    std::printf("mean_final_step %.6f\n", report.per_step_mean.back());
}

int run_simulate(const SimulationConfig& config, const std::string& out_path,
                 const std::string& format, const std::string& distortion_path,
                 const std::string& trace_path) {
    const bool keep_traces = !trace_path.empty();
    const SimulationResult result = run_simulation(config, keep_traces);
    print_summary(result.report);
    if (result.report_vs_initial) {
        std::printf("mean_final_vs_initial_population %.6f\n",
                    result.report_vs_initial->mean);
    }
    if (!out_path.empty()) {
        auto out = open_output(out_path);
        if (format == "json") {
            out << report_to_json(result.report) << '\n';
        } else {
            write_report_csv(out, result.report);
        }
    }
    if (!distortion_path.empty()) {
        auto out = open_output(distortion_path);
        write_distortion_csv(out, result.per_run_step);
    }
    if (keep_traces) {
        auto out = open_output(trace_path);
        write_trace_csv(out, result.traces);
    }
    return 0;
}

int run_theory(bool has_f, double f, const std::string& out_path) {
    if (has_f) {
        std::printf("f %.6f\n", f);
        std::printf("stationary_bit_probability %.8f\n", stationary_bit_probability(f));
        std::printf("stationary_distortion %.8f\n", stationary_distortion(f));
        return 0;
    }
    const auto [f_star, value] = worst_case_distortion();
    std::printf("worst_case_f %.8f\n", f_star);
    std::printf("worst_case_distortion %.8f\n", value);
    if (!out_path.empty()) {
        auto out = open_output(out_path);
        out << "f,stationary_p1,distortion\n";
        char buf[96];
        for (int i = 1; i < 100; ++i) {
            const double fi = i / 100.0;
            std::snprintf(buf, sizeof buf, "%.2f,%.12g,%.12g\n", fi,
                          stationary_bit_probability(fi), stationary_distortion(fi));
            out << buf;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sequential deliberation simulator: iterated pairwise Nash "
                 "bargaining over metric decision spaces, with distortion analytics"};
    app.require_subcommand(1);

    // simulate
    SimulationConfig config;
    std::string space_flag = "line";
    std::string scheme_flag = "nash";
    std::string out_path, format = "csv", distortion_path, trace_path;
    auto* simulate = app.add_subcommand("simulate", "run the main simulation protocol");
    simulate->add_option("--space", space_flag, "line|hypercube|star|graph:<path>");
    simulate->add_option("--alternatives", config.n_alternatives, "line grid size");
    simulate->add_option("--agents", config.population.n_agents, "population size");
    simulate->add_option("--steps", config.steps, "deliberation rounds");
    simulate->add_option("--runs", config.runs, "number of simulations");
    simulate->add_option("--scheme", scheme_flag,
                         "nash|selfish|unselfish|dictator|median3");
    simulate->add_option("--seed", config.master_seed, "master seed");
    simulate->add_option("--shift-scale", config.shift_scale,
                         "unselfish bliss-shift scale");
    simulate->add_option("--dim", config.hypercube_dim, "hypercube dimension");
    simulate->add_option("--bit-freq", config.bit_freq,
                         "hypercube population bit-1 probability");
    simulate->add_option("--leaves", config.star_leaves, "star leaf count");
    simulate->add_option("--threads", config.threads, "worker threads");
    simulate->add_option("--out", out_path, "report output path");
    simulate->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    simulate->add_option("--distortion-out", distortion_path,
                         "per-run distortion CSV path");
    simulate->add_option("--trace-out", trace_path, "trace CSV path");

    // theory
    double theory_f = 0.0;
    std::string theory_out;
    auto* theory = app.add_subcommand(
        "theory", "stationary-distortion curve and its worst case");
    auto* theory_f_opt = theory->add_option("--f", theory_f, "bit-1 frequency");
    theory->add_option("--out", theory_out, "curve CSV path");

    // experiment
    std::string experiment_name;
    int exp_k = 10, exp_runs = 1000, exp_agents = 300, exp_steps = 10;
    int exp_dim = 8, exp_burn_in = 500, exp_measure = 5000;
    double exp_epsilon = 0.1, exp_f = 0.2929;
    std::uint64_t exp_seed = 1;
    auto* experiment = app.add_subcommand("experiment", "named experiment recipes");
    experiment->add_option("name", experiment_name, "kstar|unanimity|second-moment|stationary")
        ->required()
        ->check(CLI::IsMember(delib::experiment_names()));
    experiment->add_option("--k", exp_k, "star leaf count");
    experiment->add_option("--epsilon", exp_epsilon, "non-unanimous fraction");
    experiment->add_option("--f", exp_f, "minority fraction / bit frequency");
    experiment->add_option("--runs", exp_runs, "number of runs");
    experiment->add_option("--agents", exp_agents, "population size");
    experiment->add_option("--steps", exp_steps, "deliberation rounds");
    experiment->add_option("--dim", exp_dim, "hypercube dimension");
    experiment->add_option("--burn-in", exp_burn_in, "chain burn-in steps");
    experiment->add_option("--measure-steps", exp_measure, "chain measurement steps");
    experiment->add_option("--seed", exp_seed, "master seed");

    // validate-space
    std::string graph_file;
    auto* validate = app.add_subcommand("validate-space",
                                        "check the median-graph property of an edge list");
    validate->add_option("file", graph_file, "edge-list file, one 'u v' per line")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (simulate->parsed()) {
            apply_space_flag(config, space_flag);
            config.mechanism = parse_mechanism(scheme_flag);
            return run_simulate(config, out_path, format, distortion_path, trace_path);
        }
        if (theory->parsed()) {
            return run_theory(theory_f_opt->count() > 0, theory_f, theory_out);
        }
        if (experiment->parsed()) {
            if (experiment_name == "kstar") {
                const auto r = run_kstar_experiment(exp_k, exp_runs, exp_seed);
                std::printf("dictator_mean %.6f\n", r.dictator_mean);
                std::printf("deliberation_mean %.6f\n", r.deliberation_mean);
            } else if (experiment_name == "unanimity") {
                const auto r = run_unanimity_experiment(exp_epsilon, exp_runs, exp_seed,
                                                        exp_agents, exp_steps);
                std::printf("deliberation_mean %.6f\n", r.deliberation_mean);
                std::printf("dictator_mean %.6f\n", r.dictator_mean);
            } else if (experiment_name == "second-moment") {
                const auto r = run_second_moment_experiment(exp_f, exp_runs, exp_seed,
                                                            exp_agents, exp_steps);
                std::printf("dictator_second_moment %.6f\n", r.dictator_second_moment);
                std::printf("deliberation_second_moment %.6f\n",
                            r.deliberation_second_moment);
            } else if (experiment_name == "stationary") {
                const auto r = run_stationary_experiment(exp_f, exp_dim, exp_agents,
                                                         exp_burn_in, exp_measure,
                                                         exp_seed);
                std::printf("theoretical_bit_probability %.6f\n", r.theoretical);
                for (std::size_t k = 0; k < r.empirical_bit_freq.size(); ++k) {
                    std::printf("empirical_bit_freq_dim%zu %.6f\n", k,
                                r.empirical_bit_freq[k]);
                }
            }
            return 0;
        }
        if (validate->parsed()) {
            const DecisionSpace space = DecisionSpace::load_edge_list(graph_file);
            if (space.is_median_graph()) {
                std::printf("median graph (%d vertices)\n", space.size());
                return 0;
            }
            std::printf("not a median graph (%d vertices)\n", space.size());
            return 1;
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
