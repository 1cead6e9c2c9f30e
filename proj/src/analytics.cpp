#include "delib/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace delib {

double social_cost(const DecisionSpace& space, const std::vector<Agent>& population,
                   int a) {
    double cost = 0.0;
    for (const auto& agent : population) cost += bliss_distance(space, agent.bliss, a);
    return cost;
}

std::pair<int, double> optimal_alternative(const DecisionSpace& space,
                                           const std::vector<Agent>& population) {
    int best = 0;
    double best_cost = social_cost(space, population, 0);
    for (int a = 1; a < space.size(); ++a) {
        const double cost = social_cost(space, population, a);
        if (cost < best_cost - 1e-12) {
            best = a;
            best_cost = cost;
        }
    }
    return {best, best_cost};
}

double distortion(const DecisionSpace& space, const std::vector<Agent>& population,
                  int a) {
    const auto [opt, opt_cost] = optimal_alternative(space, population);
    const double cost = social_cost(space, population, a);
    if (opt_cost <= 0.0) {
        return cost <= 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    }
    return cost / opt_cost;
}

bool pareto_efficient(const DecisionSpace& space, const std::vector<Agent>& population,
                      int a) {
    for (int b = 0; b < space.size(); ++b) {
        if (b == a) continue;
        bool weakly_better_for_all = true;
        bool strictly_better_for_one = false;
        for (const auto& agent : population) {
            const double da = bliss_distance(space, agent.bliss, a);
            const double db = bliss_distance(space, agent.bliss, b);
            if (db > da + 1e-12) {
                weakly_better_for_all = false;
                break;
            }
            if (db < da - 1e-12) strictly_better_for_one = true;
        }
        if (weakly_better_for_all && strictly_better_for_one) return false;
    }
    return true;
}

double stationary_bit_probability(double f) {
    if (f < 0.0 || f > 1.0) throw std::domain_error("f outside [0,1]");
    const double denom = f * f + (1.0 - f) * (1.0 - f);
    return f * f / denom;
}

double stationary_distortion(double f) {
    if (f <= 0.0 || f >= 1.0) throw std::domain_error("f outside (0,1)");
    const double pi1 = stationary_bit_probability(f);
    const double expected_cost = pi1 * (1.0 - f) + (1.0 - pi1) * f;
    return expected_cost / std::min(f, 1.0 - f);
}

std::pair<double, double> worst_case_distortion() {
    double lo = 1e-6;
    double hi = 0.5;
    double best_f = 0.25;
    double best_value = 0.0;
    double step = (hi - lo) / 10000.0;
    while (true) {
        for (double f = lo; f <= hi + step / 2; f += step) {
            const double value = stationary_distortion(std::clamp(f, 1e-12, 0.5));
            if (value > best_value) {
                best_value = value;
                best_f = f;
            }
        }
        if (step < 1e-9) break;
        lo = std::max(best_f - 2 * step, 1e-12);
        hi = std::min(best_f + 2 * step, 0.5);
        step /= 100.0;
    }
    return {best_f, best_value};
}

double quantile(std::vector<double> values, double q) {
    if (values.empty()) throw std::invalid_argument("quantile of empty set");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] * (1.0 - frac) + values[hi] * frac;
}

DistortionReport aggregate_runs(const std::vector<std::vector<double>>& per_run_step) {
    if (per_run_step.empty()) throw std::invalid_argument("no runs to aggregate");
    const std::size_t steps = per_run_step.front().size();
    if (steps == 0) throw std::invalid_argument("runs have no steps");
    for (const auto& row : per_run_step) {
        if (row.size() != steps) throw std::invalid_argument("ragged distortion matrix");
    }

    DistortionReport report;
    report.per_step_mean.resize(steps);
    report.per_step_q1.resize(steps);
    report.per_step_q3.resize(steps);
    for (std::size_t t = 0; t < steps; ++t) {
        std::vector<double> finite;
        finite.reserve(per_run_step.size());
        double sum = 0.0;
        for (const auto& row : per_run_step) {
            if (std::isfinite(row[t])) {
                finite.push_back(row[t]);
                sum += row[t];
            }
        }
        if (finite.empty()) throw std::runtime_error("all runs degenerate at a step");
        report.per_step_mean[t] = sum / static_cast<double>(finite.size());
        report.per_step_q1[t] = quantile(finite, 0.25);
        report.per_step_q3[t] = quantile(finite, 0.75);
    }

    std::vector<double> finals;
    finals.reserve(per_run_step.size());
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const auto& row : per_run_step) {
        const double final_value = row.back();
        report.per_run_final.push_back(final_value);
        if (std::isfinite(final_value)) {
            finals.push_back(final_value);
            sum += final_value;
            sum_sq += final_value * final_value;
        } else {
            ++report.infinite_count;
        }
    }
    if (finals.empty()) throw std::runtime_error("all runs degenerate");
    report.mean = sum / static_cast<double>(finals.size());
    report.q1 = quantile(finals, 0.25);
    report.q3 = quantile(finals, 0.75);
    report.second_moment = sum_sq / static_cast<double>(finals.size());
    return report;
}

}  // namespace delib
