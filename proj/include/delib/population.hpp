#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "delib/space.hpp"

namespace delib {

using Rng = std::mt19937_64;

// Independent generator substream for one run of a seeded experiment.
inline Rng make_run_rng(std::uint64_t master_seed, std::uint64_t run_index) {
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                      static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(run_index),
                      static_cast<std::uint32_t>(run_index >> 32)};
    return Rng(seq);
}

struct Agent {
    int id = 0;
    // Line spaces: a continuous point in [0,1). Discrete spaces: the
    // alternative id the agent sits on.
    double bliss = 0.0;
    double selfishness = 1.0;  // lambda, > 0
};

// Three-cluster Gaussian line population. Defaults follow the simulation
// protocol: 300 agents, cluster means uniform on [0,1), sigma 0.05,
// lambda ~ N(1, 0.1).
struct PopulationSpec {
    int n_agents = 300;
    int n_clusters = 3;
    double cluster_sigma = 0.05;
    double selfishness_mean = 1.0;
    double selfishness_sigma = 0.1;
};

// Bliss samples clamp into [0, 1-1e-9]; lambda clamps below at 0.01 so
// 1/lambda stays finite. Pure function of (spec, rng state).
std::vector<Agent> sample_population(const PopulationSpec& spec, Rng& rng);

// ceil((1-epsilon)*n) agents share one uniformly drawn alternative; the
// rest are uniform over the remaining alternatives.
std::vector<Agent> sample_epsilon_unanimous(int n, double epsilon,
                                            const DecisionSpace& space, Rng& rng);

// Hypercube population: agent bit k is 1 independently with probability f[k].
std::vector<Agent> hypercube_population_from_f(const std::vector<double>& f, int n,
                                               Rng& rng);

// CSV with header "id,bliss,selfishness".
void write_population_csv(std::ostream& out, const std::vector<Agent>& agents);
std::vector<Agent> read_population_csv(std::istream& in);

}  // namespace delib
