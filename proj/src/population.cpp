#include "delib/population.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace delib {

namespace {

constexpr double kBlissMax = 1.0 - 1e-9;
constexpr double kLambdaMin = 0.01;

double sample_lambda(const PopulationSpec& spec, Rng& rng) {
    std::normal_distribution<double> lam(spec.selfishness_mean, spec.selfishness_sigma);
    return std::max(lam(rng), kLambdaMin);
}

double bliss_of_alternative(const DecisionSpace& space, int alt) {
    return space.kind() == SpaceKind::Line ? space.line_coord(alt)
                                           : static_cast<double>(alt);
}

}  // namespace

std::vector<Agent> sample_population(const PopulationSpec& spec, Rng& rng) {
    if (spec.n_agents < 1 || spec.n_clusters < 1 || spec.cluster_sigma < 0.0 ||
        spec.selfishness_sigma < 0.0) {
        throw std::invalid_argument("invalid population spec");
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> means(spec.n_clusters);
    for (auto& m : means) m = unit(rng);

    std::uniform_int_distribution<int> pick(0, spec.n_clusters - 1);
    std::vector<Agent> agents;
    agents.reserve(spec.n_agents);
    for (int i = 0; i < spec.n_agents; ++i) {
        std::normal_distribution<double> bliss(means[pick(rng)], spec.cluster_sigma);
        Agent a;
        a.id = i;
        a.bliss = std::clamp(bliss(rng), 0.0, kBlissMax);
        a.selfishness = sample_lambda(spec, rng);
        agents.push_back(a);
    }
    return agents;
}

std::vector<Agent> sample_epsilon_unanimous(int n, double epsilon,
                                            const DecisionSpace& space, Rng& rng) {
    if (n < 1) throw std::invalid_argument("need at least 1 agent");
    if (epsilon < 0.0 || epsilon >= 1.0) throw std::invalid_argument("epsilon outside [0,1)");
    std::uniform_int_distribution<int> any(0, space.size() - 1);
    const int common = any(rng);
    const int n_common = static_cast<int>(std::ceil((1.0 - epsilon) * n));

    PopulationSpec lambda_spec;
    std::vector<Agent> agents;
    agents.reserve(n);
    for (int i = 0; i < n; ++i) {
        int alt = common;
        if (i >= n_common && space.size() > 1) {
            std::uniform_int_distribution<int> other(0, space.size() - 2);
            alt = other(rng);
            if (alt >= common) ++alt;
        }
        agents.push_back({i, bliss_of_alternative(space, alt), sample_lambda(lambda_spec, rng)});
    }
    return agents;
}

std::vector<Agent> hypercube_population_from_f(const std::vector<double>& f, int n,
                                               Rng& rng) {
    if (n < 1) throw std::invalid_argument("need at least 1 agent");
    for (double fk : f) {
        if (fk < 0.0 || fk > 1.0) throw std::invalid_argument("bit frequency outside [0,1]");
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    PopulationSpec lambda_spec;
    std::vector<Agent> agents;
    agents.reserve(n);
    for (int i = 0; i < n; ++i) {
        unsigned bits = 0;
        for (std::size_t k = 0; k < f.size(); ++k) {
            if (unit(rng) < f[k]) bits |= 1u << k;
        }
        agents.push_back({i, static_cast<double>(bits), sample_lambda(lambda_spec, rng)});
    }
    return agents;
}

void write_population_csv(std::ostream& out, const std::vector<Agent>& agents) {
    out << "id,bliss,selfishness\n";
    char buf[96];
    for (const auto& a : agents) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", a.id, a.bliss, a.selfishness);
        out << buf;
    }
}

std::vector<Agent> read_population_csv(std::istream& in) {
    std::vector<Agent> agents;
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty population CSV");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        Agent a;
        char comma;
        if (!(row >> a.id >> comma >> a.bliss >> comma >> a.selfishness)) {
            throw std::invalid_argument("malformed population CSV row: " + line);
        }
        agents.push_back(a);
    }
    return agents;
}

}  // namespace delib
