#include "delib/deliberation.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace delib {

namespace {

int uniform_agent(const std::vector<Agent>& population, Rng& rng) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(population.size()) - 1);
    return pick(rng);
}

std::pair<int, int> distinct_pair(const std::vector<Agent>& population, Rng& rng) {
    const int n = static_cast<int>(population.size());
    std::uniform_int_distribution<int> first(0, n - 1);
    std::uniform_int_distribution<int> second(0, n - 2);
    const int i = first(rng);
    int j = second(rng);
    if (j >= i) ++j;
    return {i, j};
}

}  // namespace

DeliberationTrace run_deliberation(const DecisionSpace& space,
                                   std::vector<Agent> population,
                                   const BargainScheme& scheme, int rounds, Rng& rng) {
    if (population.empty()) throw std::invalid_argument("empty population");
    if (rounds < 0) throw std::invalid_argument("negative round count");
    if (rounds >= 1 && population.size() < 2) {
        throw std::invalid_argument("deliberation needs at least 2 agents");
    }

    DeliberationTrace trace;
    trace.initial = snap_bliss(space, population[uniform_agent(population, rng)].bliss);
    trace.final_outcome = trace.initial;
    trace.steps.reserve(rounds);

    const bool snapshot = scheme.kind == SchemeKind::Unselfish;
    int threat = trace.initial;
    for (int t = 0; t < rounds; ++t) {
        auto [i, j] = distinct_pair(population, rng);
        const BargainResult result =
            bargain_step(space, scheme, population[i], population[j], threat, rng);
        if (result.updated_bliss) {
            population[i].bliss = result.updated_bliss->first;
            population[j].bliss = result.updated_bliss->second;
        }
        trace.steps.push_back({t, population[i].id, population[j].id, threat,
                               result.outcome});
        if (snapshot) {
            std::vector<double> bliss(population.size());
            for (std::size_t a = 0; a < population.size(); ++a) bliss[a] = population[a].bliss;
            trace.bliss_snapshots.push_back(std::move(bliss));
        }
        threat = result.outcome;
    }
    trace.final_outcome = threat;
    trace.final_population = std::move(population);
    return trace;
}

int random_dictator(const DecisionSpace& space, const std::vector<Agent>& population,
                    Rng& rng) {
    if (population.empty()) throw std::invalid_argument("empty population");
    return snap_bliss(space, population[uniform_agent(population, rng)].bliss);
}

int one_shot_median3(const DecisionSpace& space, const std::vector<Agent>& population,
                     Rng& rng) {
    if (!space.is_median_graph()) {
        throw std::runtime_error("one_shot_median3: space is not a median graph");
    }
    if (population.size() < 3) throw std::invalid_argument("need at least 3 agents");
    const int n = static_cast<int>(population.size());
    std::uniform_int_distribution<int> first(0, n - 1);
    std::uniform_int_distribution<int> second(0, n - 2);
    std::uniform_int_distribution<int> third(0, n - 3);
    const int i = first(rng);
    int j = second(rng);
    if (j >= i) ++j;
    int k = third(rng);
    for (int taken : {std::min(i, j), std::max(i, j)}) {
        if (k >= taken) ++k;
    }
    return space.median3(snap_bliss(space, population[i].bliss),
                         snap_bliss(space, population[j].bliss),
                         snap_bliss(space, population[k].bliss));
}

void write_trace_csv(std::ostream& out, const std::vector<DeliberationTrace>& traces) {
    out << "run,step,agent_u,agent_v,threat,outcome\n";
    for (std::size_t r = 0; r < traces.size(); ++r) {
        for (const auto& s : traces[r].steps) {
            out << r << ',' << s.round << ',' << s.agent_u << ',' << s.agent_v << ','
                << s.threat << ',' << s.outcome << '\n';
        }
    }
}

}  // namespace delib
