#pragma once

#include <utility>
#include <vector>

#include "delib/population.hpp"
#include "delib/space.hpp"

namespace delib {

// Sum of distances from every agent's bliss point to a. Continuous bliss
// points on the line are measured directly by |.|.
double social_cost(const DecisionSpace& space, const std::vector<Agent>& population,
                   int a);

// Brute-force social-cost minimizer and its cost; ties break to lower id.
std::pair<int, double> optimal_alternative(const DecisionSpace& space,
                                           const std::vector<Agent>& population);

// SC(a)/SC(a*). A degenerate optimum (SC(a*) = 0) yields 1 when SC(a) is
// also 0, otherwise +infinity (callers count and exclude those).
double distortion(const DecisionSpace& space, const std::vector<Agent>& population,
                  int a);

// True iff no alternative weakly improves every agent and strictly improves
// at least one.
bool pareto_efficient(const DecisionSpace& space, const std::vector<Agent>& population,
                      int a);

// Stationary probability that a dimension's bit is 1 in the deliberation
// chain, given bit-1 population frequency f: f^2 / (f^2 + (1-f)^2).
double stationary_bit_probability(double f);

// Per-dimension stationary expected social cost over the optimal cost:
// [pi1*(1-f) + (1-pi1)*f] / min(f, 1-f). Requires 0 < f < 1.
double stationary_distortion(double f);

// (f*, value) maximizing stationary_distortion over (0, 0.5], grid search
// refined to resolution 1e-8.
std::pair<double, double> worst_case_distortion();

struct DistortionReport {
    std::vector<double> per_run_final;  // +inf marks degenerate runs
    std::vector<double> per_step_mean;
    std::vector<double> per_step_q1;
    std::vector<double> per_step_q3;
    double mean = 0.0;
    double q1 = 0.0;
    double q3 = 0.0;
    double second_moment = 0.0;
    int infinite_count = 0;
};

// Per-step mean and quartiles (linear interpolation over the sorted finite
// values), final-step mean/quartiles/second moment. Infinite entries are
// counted and excluded. Order-independent; throws if every final is infinite.
DistortionReport aggregate_runs(const std::vector<std::vector<double>>& per_run_step);

// Quantile by linear interpolation of sorted values, q in [0,1].
double quantile(std::vector<double> values, double q);

}  // namespace delib
