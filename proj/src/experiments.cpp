#include "delib/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace delib {

namespace {

DecisionSpace build_space(const SimulationConfig& config) {
    switch (config.space_kind) {
        case SpaceKind::Line:
            return DecisionSpace::line(config.n_alternatives);
        case SpaceKind::Hypercube:
            return DecisionSpace::hypercube(config.hypercube_dim);
        case SpaceKind::Star:
            return DecisionSpace::star(config.star_leaves);
        case SpaceKind::GeneralGraph:
            return DecisionSpace::load_edge_list(config.graph_path);
    }
    throw std::logic_error("unknown space kind");
}

std::vector<Agent> build_population(const SimulationConfig& config,
                                    const DecisionSpace& space, Rng& rng) {
    switch (config.space_kind) {
        case SpaceKind::Line:
            return sample_population(config.population, rng);
        case SpaceKind::Hypercube:
            return hypercube_population_from_f(
                std::vector<double>(config.hypercube_dim, config.bit_freq),
                config.population.n_agents, rng);
        case SpaceKind::Star: {
            // agents uniform over the leaves (vertex 0 is the center)
            std::uniform_int_distribution<int> leaf(1, space.size() - 1);
            PopulationSpec lambda_spec = config.population;
            std::normal_distribution<double> lam(lambda_spec.selfishness_mean,
                                                 lambda_spec.selfishness_sigma);
            std::vector<Agent> agents;
            agents.reserve(config.population.n_agents);
            for (int i = 0; i < config.population.n_agents; ++i) {
                agents.push_back({i, static_cast<double>(leaf(rng)),
                                  std::max(lam(rng), 0.01)});
            }
            return agents;
        }
        case SpaceKind::GeneralGraph: {
            std::uniform_int_distribution<int> vertex(0, space.size() - 1);
            std::normal_distribution<double> lam(config.population.selfishness_mean,
                                                 config.population.selfishness_sigma);
            std::vector<Agent> agents;
            agents.reserve(config.population.n_agents);
            for (int i = 0; i < config.population.n_agents; ++i) {
                agents.push_back({i, static_cast<double>(vertex(rng)),
                                  std::max(lam(rng), 0.01)});
            }
            return agents;
        }
    }
    throw std::logic_error("unknown space kind");
}

double distortion_with_optimum(const DecisionSpace& space,
                               const std::vector<Agent>& population, int a,
                               double opt_cost) {
    const double cost = social_cost(space, population, a);
    if (opt_cost <= 0.0) {
        return cost <= 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    }
    return cost / opt_cost;
}

void parallel_runs(int runs, int threads, const std::function<void(int)>& body) {
    if (threads <= 1) {
        for (int r = 0; r < runs; ++r) body(r);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (int r = next.fetch_add(1); r < runs; r = next.fetch_add(1)) body(r);
        });
    }
    for (auto& worker : pool) worker.join();
}

}  // namespace

SimulationResult run_simulation(const SimulationConfig& config, bool keep_traces) {
    if (config.runs < 1) throw std::invalid_argument("need at least 1 run");
    const DecisionSpace space = build_space(config);
    const int columns = std::max(config.steps, 1);
    const bool unselfish = config.mechanism == Mechanism::Unselfish;

    SimulationResult result;
    result.per_run_step.assign(config.runs, std::vector<double>(columns));
    std::vector<std::vector<double>> vs_initial;
    if (unselfish) vs_initial.assign(config.runs, std::vector<double>(columns));
    if (keep_traces) result.traces.resize(config.runs);

    const auto run_one = [&](int r) {
        Rng rng = make_run_rng(config.master_seed, static_cast<std::uint64_t>(r));
        const std::vector<Agent> population = build_population(config, space, rng);
        auto& row = result.per_run_step[r];

        if (config.mechanism == Mechanism::Dictator ||
            config.mechanism == Mechanism::OneShotMedian3) {
            const int outcome = config.mechanism == Mechanism::Dictator
                                    ? random_dictator(space, population, rng)
                                    : one_shot_median3(space, population, rng);
            std::fill(row.begin(), row.end(), distortion(space, population, outcome));
            return;
        }

        BargainScheme scheme;
        scheme.shift_scale = config.shift_scale;
        scheme.kind = config.mechanism == Mechanism::Selfish   ? SchemeKind::Selfish
                      : config.mechanism == Mechanism::Unselfish ? SchemeKind::Unselfish
                                                                 : SchemeKind::Nash;
        DeliberationTrace trace =
            run_deliberation(space, population, scheme, config.steps, rng);

        const auto [opt0, opt0_cost] = optimal_alternative(space, population);
        if (config.steps == 0) {
            row[0] = distortion_with_optimum(space, population, trace.initial, opt0_cost);
        } else if (!unselfish) {
            for (int t = 0; t < config.steps; ++t) {
                row[t] = distortion_with_optimum(space, population,
                                                 trace.steps[t].outcome, opt0_cost);
            }
        } else {
            std::vector<Agent> shifted = population;
            for (int t = 0; t < config.steps; ++t) {
                for (std::size_t a = 0; a < shifted.size(); ++a) {
                    shifted[a].bliss = trace.bliss_snapshots[t][a];
                }
                const auto [opt_t, opt_t_cost] = optimal_alternative(space, shifted);
                row[t] = distortion_with_optimum(space, shifted, trace.steps[t].outcome,
                                                 opt_t_cost);
                vs_initial[r][t] = distortion_with_optimum(
                    space, population, trace.steps[t].outcome, opt0_cost);
            }
        }
        if (keep_traces) result.traces[r] = std::move(trace);
    };

    parallel_runs(config.runs, config.threads, run_one);

    result.report = aggregate_runs(result.per_run_step);
    if (unselfish) result.report_vs_initial = aggregate_runs(vs_initial);
    return result;
}

KStarResult run_kstar_experiment(int k, int runs, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("k-star needs k >= 2");
    if (runs < 1) throw std::invalid_argument("need at least 1 run");
    const DecisionSpace space = DecisionSpace::star(k);

    std::vector<Agent> population;
    population.reserve(k);
    for (int i = 0; i < k; ++i) {
        population.push_back({i, static_cast<double>(i + 1), 1.0});
    }
    const auto [opt, opt_cost] = optimal_alternative(space, population);

    KStarResult result;
    BargainScheme nash;
    for (int r = 0; r < runs; ++r) {
        Rng rng = make_run_rng(seed, static_cast<std::uint64_t>(r));
        const int pick = random_dictator(space, population, rng);
        result.dictator_mean += distortion_with_optimum(space, population, pick, opt_cost);
        const DeliberationTrace trace = run_deliberation(space, population, nash, 10, rng);
        result.deliberation_mean +=
            distortion_with_optimum(space, population, trace.final_outcome, opt_cost);
    }
    result.dictator_mean /= runs;
    result.deliberation_mean /= runs;
    return result;
}

UnanimityResult run_unanimity_experiment(double epsilon, int runs, std::uint64_t seed,
                                         int n_agents, int steps) {
    if (epsilon < 0.0 || epsilon >= 0.5) throw std::invalid_argument("epsilon outside [0,0.5)");
    if (runs < 1) throw std::invalid_argument("need at least 1 run");
    const DecisionSpace space = DecisionSpace::general_graph(2, {{0, 1}});

    UnanimityResult result;
    BargainScheme nash;
    for (int r = 0; r < runs; ++r) {
        Rng rng = make_run_rng(seed, static_cast<std::uint64_t>(r));
        const auto population = sample_epsilon_unanimous(n_agents, epsilon, space, rng);
        const auto [opt, opt_cost] = optimal_alternative(space, population);
        const DeliberationTrace trace =
            run_deliberation(space, population, nash, steps, rng);
        result.deliberation_mean +=
            distortion_with_optimum(space, population, trace.final_outcome, opt_cost);
        result.dictator_mean += distortion_with_optimum(
            space, population, random_dictator(space, population, rng), opt_cost);
    }
    result.deliberation_mean /= runs;
    result.dictator_mean /= runs;
    return result;
}

SecondMomentResult run_second_moment_experiment(double f, int runs, std::uint64_t seed,
                                                int n_agents, int steps) {
    if (f <= 0.0 || f >= 0.5) throw std::invalid_argument("f outside (0,0.5)");
    if (runs < 1) throw std::invalid_argument("need at least 1 run");
    const DecisionSpace space = DecisionSpace::general_graph(2, {{0, 1}});

    const int minority = std::max(1, static_cast<int>(std::lround(f * n_agents)));
    std::vector<Agent> population;
    population.reserve(n_agents);
    for (int i = 0; i < n_agents; ++i) {
        population.push_back({i, i < minority ? 1.0 : 0.0, 1.0});
    }
    const auto [opt, opt_cost] = optimal_alternative(space, population);

    SecondMomentResult result;
    BargainScheme nash;
    for (int r = 0; r < runs; ++r) {
        Rng rng = make_run_rng(seed, static_cast<std::uint64_t>(r));
        const double dict = distortion_with_optimum(
            space, population, random_dictator(space, population, rng), opt_cost);
        result.dictator_second_moment += dict * dict;
        const DeliberationTrace trace =
            run_deliberation(space, population, nash, steps, rng);
        const double delib = distortion_with_optimum(space, population,
                                                     trace.final_outcome, opt_cost);
        result.deliberation_second_moment += delib * delib;
    }
    result.dictator_second_moment /= runs;
    result.deliberation_second_moment /= runs;
    return result;
}

StationaryResult run_stationary_experiment(double f, int dim, int n_agents,
                                           int burn_in, int measure_steps,
                                           std::uint64_t seed) {
    if (f < 0.0 || f > 1.0) throw std::invalid_argument("f outside [0,1]");
    if (measure_steps < 1) throw std::invalid_argument("need measurement steps");
    const DecisionSpace space = DecisionSpace::hypercube(dim);
    Rng rng = make_run_rng(seed, 0);

    // Exact per-dimension bit counts so the empirical frequency is f itself
    // up to rounding, not a binomial draw around it.
    const int ones = static_cast<int>(std::lround(f * n_agents));
    std::vector<Agent> population;
    population.reserve(n_agents);
    for (int i = 0; i < n_agents; ++i) population.push_back({i, 0.0, 1.0});
    std::vector<int> order(n_agents);
    for (int k = 0; k < dim; ++k) {
        for (int i = 0; i < n_agents; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        for (int j = 0; j < ones; ++j) {
            population[order[j]].bliss += static_cast<double>(1u << k);
        }
    }

    BargainScheme nash;
    const DeliberationTrace trace =
        run_deliberation(space, population, nash, burn_in + measure_steps, rng);

    StationaryResult result;
    result.f = f;
    result.theoretical = stationary_bit_probability(f);
    result.empirical_bit_freq.assign(dim, 0.0);
    for (int t = burn_in; t < burn_in + measure_steps; ++t) {
        const unsigned state = static_cast<unsigned>(trace.steps[t].outcome);
        for (int k = 0; k < dim; ++k) {
            if (state & (1u << k)) result.empirical_bit_freq[k] += 1.0;
        }
    }
    for (double& freq : result.empirical_bit_freq) freq /= measure_steps;
    return result;
}

std::vector<std::string> experiment_names() {
    return {"kstar", "unanimity", "second-moment", "stationary"};
}

}  // namespace delib
