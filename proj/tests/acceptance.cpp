// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Thresholds are pinned in code; seeds are fixed for reproducibility.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "delib/analytics.hpp"
#include "delib/bargain.hpp"
#include "delib/deliberation.hpp"
#include "delib/experiments.hpp"

using namespace delib;

namespace {

constexpr std::uint64_t kSeed = 20260826;
int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s  %-24s %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* pattern, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

// --- criterion 1: nash_bargain == median3 on median spaces, on-grid bliss ---
void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng = make_run_rng(kSeed, 1);
    int mismatches = 0;
    int total = 0;
    for (int n : {51, 201}) {
        const auto line = DecisionSpace::line(n);
        std::uniform_int_distribution<int> any(0, n - 1);
        for (int i = 0; i < 1000; ++i) {
            const int pu = any(rng), pv = any(rng), t = any(rng);
            const Agent u{0, line.line_coord(pu), 1.0};
            const Agent v{1, line.line_coord(pv), 1.0};
            if (nash_bargain(line, u, v, t) != line.median3(pu, pv, t)) ++mismatches;
            ++total;
        }
    }
    for (int k = 1; k <= 5; ++k) {
        const auto cube = DecisionSpace::hypercube(k);
        std::uniform_int_distribution<int> any(0, cube.size() - 1);
        for (int i = 0; i < 1000; ++i) {
            const int pu = any(rng), pv = any(rng), t = any(rng);
            const Agent u{0, static_cast<double>(pu), 1.0};
            const Agent v{1, static_cast<double>(pv), 1.0};
            if (nash_bargain(cube, u, v, t) != cube.median3(pu, pv, t)) ++mismatches;
            ++total;
        }
    }
    const double elapsed = seconds_since(start);
    report("1 lemma1-equivalence", mismatches == 0 && elapsed < 10.0,
           fmt("%d/%d matches, %.2fs", total - mismatches, total, elapsed));
}

SimulationConfig headline_config(Mechanism mechanism) {
    SimulationConfig config;
    config.mechanism = mechanism;
    config.master_seed = kSeed;
    config.threads = 4;
    return config;  // |S|=50, |A|=300, T=10, R=1000 are the struct defaults
}

// --- criteria 2-5: the headline simulations, shared seeds ---
void criteria_2_to_5() {
    const auto start = std::chrono::steady_clock::now();
    const auto nash = run_simulation(headline_config(Mechanism::Nash));
    const double nash_elapsed = seconds_since(start);
    const auto selfish = run_simulation(headline_config(Mechanism::Selfish));
    const auto unselfish = run_simulation(headline_config(Mechanism::Unselfish));

    const double nash_mean = nash.report.per_step_mean.back();
    report("2 nash-headline",
           nash_mean >= 1.10 && nash_mean <= 1.21 && nash.report.q3 <= 1.30 &&
               nash_elapsed < 120.0,
           fmt("mean=%.4f (in [1.10,1.21]), q3=%.4f (<=1.30), %.1fs", nash_mean,
               nash.report.q3, nash_elapsed));

    const double selfish_mean = selfish.report.per_step_mean.back();
    const double selfish_drift =
        std::abs(selfish.report.per_step_mean.back() - selfish.report.per_step_mean.front());
    report("3 selfish-simulation",
           selfish_mean > nash_mean && selfish_mean > 1.208 && selfish_drift < 0.03,
           fmt("mean=%.4f (> nash %.4f, > 1.208), |step10-step1|=%.4f (<0.03)",
               selfish_mean, nash_mean, selfish_drift));

    const double unselfish_mean = unselfish.report.per_step_mean.back();
    report("4 unselfish-simulation", std::abs(unselfish_mean - nash_mean) <= 0.06,
           fmt("mean=%.4f, |mean-nash|=%.4f (<=0.06)", unselfish_mean,
               std::abs(unselfish_mean - nash_mean)));

    report("5 nash-convergence", nash.report.per_step_mean[1] < 1.2,
           fmt("mean at step 2 = %.4f (<1.2)", nash.report.per_step_mean[1]));
}

// --- criterion 6: closed-form worst case + empirical hypercube chain ---
void criterion_6() {
    const auto [f_star, value] = worst_case_distortion();
    bool ok = value >= 1.2070 && value <= 1.2072 && f_star >= 0.2928 && f_star <= 0.2930;
    std::string detail = fmt("f*=%.6f, value=%.6f", f_star, value);
    for (double f : {0.1, 0.2929, 0.5}) {
        // long window: the per-dimension threat chain is autocorrelated (rho=0.5 at
        // f=0.5), so a short time average has sd well above the 0.02 tolerance
        const auto chain = run_stationary_experiment(f, 8, 2000, 2000, 100000, kSeed);
        double worst_gap = 0.0;
        for (double freq : chain.empirical_bit_freq) {
            worst_gap = std::max(worst_gap, std::abs(freq - chain.theoretical));
        }
        ok = ok && worst_gap < 0.02;
        detail += fmt("; f=%.4f gap=%.4f", f, worst_gap);
    }
    report("6 theory", ok, detail);
}

// --- criterion 7: dictatorship distortion bound ---
void criterion_7() {
    auto config = headline_config(Mechanism::Dictator);
    config.runs = 10000;
    const auto dictator = run_simulation(config);
    const auto kstar = run_kstar_experiment(50, 200, kSeed);
    const bool ok = dictator.report.mean <= 2.02 &&
                    std::abs(kstar.dictator_mean - 1.96) <= 0.05;
    report("7 dictatorship-bound", ok,
           fmt("line mean=%.4f (<=2.02), kstar(50) mean=%.4f (within 0.05 of 1.96)",
               dictator.report.mean, kstar.dictator_mean));
}

// --- criterion 8: second-moment contrast at f = 0.01 ---
void criterion_8() {
    const auto r = run_second_moment_experiment(0.01, 5000, kSeed, 100, 10);
    report("8 second-moment",
           r.dictator_second_moment >= 50.0 && r.deliberation_second_moment <= 5.0,
           fmt("dictator=%.2f (>=50), deliberation=%.2f (<=5)",
               r.dictator_second_moment, r.deliberation_second_moment));
}

// --- criterion 9: epsilon-unanimity separation ---
void criterion_9() {
    const auto r = run_unanimity_experiment(0.1, 5000, kSeed, 300, 10);
    report("9 epsilon-unanimity",
           r.deliberation_mean <= 1.15 && r.dictator_mean >= 1.6,
           fmt("deliberation=%.4f (<=1.15), dictator=%.4f (>=1.6)",
               r.deliberation_mean, r.dictator_mean));
}

// --- criterion 10: property suites ---
bool triangle_inequality_suite() {
    const DecisionSpace spaces[] = {
        DecisionSpace::line(50), DecisionSpace::hypercube(6), DecisionSpace::star(10),
        DecisionSpace::general_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {4, 5}})};
    Rng rng = make_run_rng(kSeed, 10);
    for (const auto& space : spaces) {
        std::uniform_int_distribution<int> any(0, space.size() - 1);
        for (int i = 0; i < 10000; ++i) {
            const int x = any(rng), y = any(rng), z = any(rng);
            if (space.distance(x, z) > space.distance(x, y) + space.distance(y, z) + 1e-12) {
                return false;
            }
        }
    }
    return true;
}

bool chaining_and_rationality_suite() {
    const auto line = DecisionSpace::line(50);
    Rng rng = make_run_rng(kSeed, 11);
    PopulationSpec spec;
    spec.n_agents = 60;
    for (int trial = 0; trial < 50; ++trial) {
        const auto population = sample_population(spec, rng);
        const auto trace = run_deliberation(line, population, {}, 10, rng);
        if (trace.steps.front().threat != trace.initial) return false;
        for (std::size_t t = 1; t < trace.steps.size(); ++t) {
            if (trace.steps[t].threat != trace.steps[t - 1].outcome) return false;
        }
        // individual rationality of every bargained step
        for (const auto& s : trace.steps) {
            const Agent& u = population[s.agent_u];
            const Agent& v = population[s.agent_v];
            if (bliss_distance(line, u.bliss, s.outcome) >
                    bliss_distance(line, u.bliss, s.threat) + 1e-12 ||
                bliss_distance(line, v.bliss, s.outcome) >
                    bliss_distance(line, v.bliss, s.threat) + 1e-12) {
                return false;
            }
        }
    }
    return true;
}

bool pareto_suite() {
    Rng rng = make_run_rng(kSeed, 12);
    const auto line = DecisionSpace::line(50);
    std::uniform_int_distribution<int> grid(0, 49);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Agent> population;
        for (int i = 0; i < 25; ++i) population.push_back({i, line.line_coord(grid(rng)), 1.0});
        const auto trace = run_deliberation(line, population, {}, 10, rng);
        for (const auto& s : trace.steps) {
            if (!pareto_efficient(line, population, s.outcome)) return false;
        }
    }
    const auto cube = DecisionSpace::hypercube(4);
    for (int trial = 0; trial < 20; ++trial) {
        auto population =
            hypercube_population_from_f(std::vector<double>(4, 0.4), 40, rng);
        const auto trace = run_deliberation(cube, population, {}, 10, rng);
        for (const auto& s : trace.steps) {
            if (!pareto_efficient(cube, population, s.outcome)) return false;
        }
    }
    return true;
}

bool determinism_suite() {
    for (Mechanism m : {Mechanism::Nash, Mechanism::Selfish, Mechanism::Unselfish}) {
        auto config = headline_config(m);
        config.runs = 50;
        config.threads = 1;
        const auto a = run_simulation(config);
        config.threads = 3;
        const auto b = run_simulation(config);
        if (a.per_run_step != b.per_run_step) return false;
    }
    return true;
}

bool aggregation_suite() {
    Rng rng = make_run_rng(kSeed, 13);
    std::uniform_real_distribution<double> d(1.0, 4.0);
    std::vector<std::vector<double>> rows;
    for (int r = 0; r < 100; ++r) rows.push_back({d(rng), d(rng), d(rng), d(rng)});
    const auto before = aggregate_runs(rows);
    std::shuffle(rows.begin(), rows.end(), rng);
    const auto after = aggregate_runs(rows);
    const auto close = [](double a, double b) { return std::abs(a - b) < 1e-9; };
    if (!close(before.mean, after.mean) || !close(before.q1, after.q1) ||
        !close(before.q3, after.q3) || !close(before.second_moment, after.second_moment)) {
        return false;
    }
    for (std::size_t t = 0; t < before.per_step_mean.size(); ++t) {
        if (!close(before.per_step_mean[t], after.per_step_mean[t])) return false;
    }
    return true;
}

void criterion_10() {
    const bool triangle = triangle_inequality_suite();
    const bool chaining = chaining_and_rationality_suite();
    const bool pareto = pareto_suite();
    const bool determinism = determinism_suite();
    const bool aggregation = aggregation_suite();
    report("10 property-suites",
           triangle && chaining && pareto && determinism && aggregation,
           fmt("triangle=%d chaining/IR=%d pareto=%d determinism=%d aggregation=%d",
               triangle, chaining, pareto, determinism, aggregation));
}

}  // namespace

int main() {
    criterion_1();
    criteria_2_to_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
