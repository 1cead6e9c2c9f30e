#pragma once

#include <vector>

#include "delib/bargain.hpp"
#include "delib/population.hpp"
#include "delib/space.hpp"

namespace delib {

struct DeliberationStep {
    int round = 0;  // 0-based
    int agent_u = 0;
    int agent_v = 0;
    int threat = 0;
    int outcome = 0;
};

struct DeliberationTrace {
    int initial = 0;
    std::vector<DeliberationStep> steps;
    int final_outcome = 0;
    // Unselfish only: bliss array after each round's shifts.
    std::vector<std::vector<double>> bliss_snapshots;
    // Population after the run (bliss points shifted for Unselfish).
    std::vector<Agent> final_population;
};

// Sequential deliberation: the initial disagreement alternative is the
// grid-snapped bliss of one uniformly drawn agent; each round draws two
// distinct agents uniformly (no cross-round memory), bargains against the
// current threat, and chains the outcome as the next threat. The Unselfish
// scheme mutates the run's private population copy.
DeliberationTrace run_deliberation(const DecisionSpace& space,
                                   std::vector<Agent> population,
                                   const BargainScheme& scheme, int rounds, Rng& rng);

// Grid-snapped bliss point of a uniformly drawn agent.
int random_dictator(const DecisionSpace& space, const std::vector<Agent>& population,
                    Rng& rng);

// Median of three distinct uniformly drawn agents' grid-snapped bliss points.
int one_shot_median3(const DecisionSpace& space, const std::vector<Agent>& population,
                     Rng& rng);

void write_trace_csv(std::ostream& out, const std::vector<DeliberationTrace>& traces);

}  // namespace delib
