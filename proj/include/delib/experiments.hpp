#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "delib/analytics.hpp"
#include "delib/deliberation.hpp"

namespace delib {

enum class Mechanism { Nash, Selfish, Unselfish, Dictator, OneShotMedian3 };

struct SimulationConfig {
    SpaceKind space_kind = SpaceKind::Line;
    int n_alternatives = 50;  // line grid size
    int hypercube_dim = 8;
    double bit_freq = 0.5;  // hypercube population bit-1 probability
    int star_leaves = 10;
    std::string graph_path;

    PopulationSpec population;
    Mechanism mechanism = Mechanism::Nash;
    double shift_scale = 0.05;
    int steps = 10;
    int runs = 1000;
    std::uint64_t master_seed = 1;
    int threads = 1;
};

struct SimulationResult {
    DistortionReport report;  // Unselfish: measured against the shifted population
    // Unselfish only: the same runs measured against the initial population.
    std::optional<DistortionReport> report_vs_initial;
    std::vector<std::vector<double>> per_run_step;  // runs x steps
    std::vector<DeliberationTrace> traces;          // filled when keep_traces
};

// One full simulation protocol: per run a fresh population (fresh cluster
// means), one deliberation (or one-shot mechanism draw), per-step
// distortion. Deterministic given master_seed, independent of thread count.
SimulationResult run_simulation(const SimulationConfig& config,
                                      bool keep_traces = false);

struct KStarResult {
    double dictator_mean = 0.0;
    double deliberation_mean = 0.0;
};

// k agents on k distinct leaves of a k-star; mean distortion of random
// dictatorship and of Nash deliberation (T = 10) over the given runs.
KStarResult run_kstar_experiment(int k, int runs, std::uint64_t seed);

struct UnanimityResult {
    double deliberation_mean = 0.0;
    double dictator_mean = 0.0;
};

// Epsilon-unanimous populations on a two-alternative space: mean final
// distortion of Nash deliberation vs random dictatorship.
UnanimityResult run_unanimity_experiment(double epsilon, int runs, std::uint64_t seed,
                                         int n_agents = 300, int steps = 10);

struct SecondMomentResult {
    double dictator_second_moment = 0.0;
    double deliberation_second_moment = 0.0;
};

// Two-node instance with round(f*n) agents on the minority node: second
// moment of distortion for dictatorship vs Nash deliberation.
SecondMomentResult run_second_moment_experiment(double f, int runs, std::uint64_t seed,
                                                int n_agents = 100, int steps = 10);

struct StationaryResult {
    double f = 0.0;
    double theoretical = 0.0;                 // stationary_bit_probability(f)
    std::vector<double> empirical_bit_freq;   // per dimension, post burn-in
};

// Runs one long Nash deliberation chain on a hypercube population with bit
// frequency f in every dimension (exact per-dimension counts) and measures
// the post-burn-in bit-1 frequency of the disagreement state.
StationaryResult run_stationary_experiment(double f, int dim, int n_agents,
                                           int burn_in, int measure_steps,
                                           std::uint64_t seed);

// Names accepted by the CLI `experiment` subcommand.
std::vector<std::string> experiment_names();

}  // namespace delib
