#include "delib/bargain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace delib {

namespace {

constexpr double kTieTol = 1e-12;

void require_line(const DecisionSpace& space, const char* op) {
    if (space.kind() != SpaceKind::Line) {
        throw std::invalid_argument(std::string(op) + ": only defined on line spaces");
    }
}

double draw_noise(const BargainScheme& scheme, Rng& rng) {
    std::uniform_real_distribution<double> noise(scheme.noise_lo, scheme.noise_hi);
    return noise(rng);
}

}  // namespace

double nash_product(const DecisionSpace& space, const Agent& u, const Agent& v,
                    int threat, int o) {
    const double gain_u = bliss_distance(space, u.bliss, threat) -
                          bliss_distance(space, u.bliss, o);
    const double gain_v = bliss_distance(space, v.bliss, threat) -
                          bliss_distance(space, v.bliss, o);
    return gain_u * gain_v;
}

int nash_bargain(const DecisionSpace& space, const Agent& u, const Agent& v,
                 int threat) {
    const double du_t = bliss_distance(space, u.bliss, threat);
    const double dv_t = bliss_distance(space, v.bliss, threat);

    int best = threat;
    double best_product = 0.0;
    double best_threat_dist = 0.0;
    for (int o = 0; o < space.size(); ++o) {
        const double gain_u = du_t - bliss_distance(space, u.bliss, o);
        const double gain_v = dv_t - bliss_distance(space, v.bliss, o);
        if (gain_u < 0.0 || gain_v < 0.0) continue;  // individually rational only
        const double product = gain_u * gain_v;
        if (product < best_product - kTieTol) continue;
        if (product > best_product + kTieTol) {
            best = o;
            best_product = product;
            best_threat_dist = space.distance(o, threat);
            continue;
        }
        // tie: closest to the threat, then lower id (ascending scan)
        const double threat_dist = space.distance(o, threat);
        if (threat_dist < best_threat_dist - kTieTol) {
            best = o;
            best_product = product;
            best_threat_dist = threat_dist;
        }
    }
    return best;
}

int selfish_perturb(const DecisionSpace& space, int nash_outcome, double selfish_bliss,
                    double weight, double noise) {
    require_line(space, "selfish_perturb");
    const double o = space.line_coord(nash_outcome);
    if (selfish_bliss == o) return nash_outcome;
    const double direction = selfish_bliss > o ? 1.0 : -1.0;
    const double shifted = std::clamp(o + weight * noise * direction, 0.0, 1.0 - 1e-9);
    return space.nearest_alternative(shifted);
}

int selfish_bargain(const DecisionSpace& space, const Agent& u, const Agent& v,
                    int threat, const BargainScheme& scheme, Rng& rng) {
    require_line(space, "selfish_bargain");
    const int o = nash_bargain(space, u, v, threat);
    if (u.selfishness == v.selfishness) return o;
    const Agent& selfish = u.selfishness > v.selfishness ? u : v;
    const Agent& other = u.selfishness > v.selfishness ? v : u;
    if (selfish.bliss == space.line_coord(o)) return o;
    const double weight = selfish.selfishness - other.selfishness;
    return selfish_perturb(space, o, selfish.bliss, weight, draw_noise(scheme, rng));
}

double unselfish_shift(double bliss_x, double bliss_y, double threat_coord,
                       double lambda_x, double shift_scale, double noise) {
    const double destination = ((bliss_y - bliss_x) + (threat_coord - bliss_x)) / 2.0;
    if (destination == 0.0) return bliss_x;
    const double step =
        std::min(shift_scale * (1.0 / lambda_x) * noise, std::abs(destination));
    const double shifted = bliss_x + (destination > 0.0 ? step : -step);
    return std::clamp(shifted, 0.0, 1.0 - 1e-9);
}

BargainResult unselfish_bargain(const DecisionSpace& space, const Agent& u,
                                const Agent& v, int threat,
                                const BargainScheme& scheme, Rng& rng) {
    require_line(space, "unselfish_bargain");
    const int o = nash_bargain(space, u, v, threat);
    const double threat_coord = space.line_coord(threat);

    // Sequential shifts: the (v,u) pass sees u's already-updated bliss.
    double bu = u.bliss;
    double bv = v.bliss;
    if (((bv - bu) + (threat_coord - bu)) / 2.0 != 0.0) {
        bu = unselfish_shift(bu, bv, threat_coord, u.selfishness, scheme.shift_scale,
                             draw_noise(scheme, rng));
    }
    if (((bu - bv) + (threat_coord - bv)) / 2.0 != 0.0) {
        bv = unselfish_shift(bv, bu, threat_coord, v.selfishness, scheme.shift_scale,
                             draw_noise(scheme, rng));
    }
    return {o, std::make_pair(bu, bv)};
}

BargainResult bargain_step(const DecisionSpace& space, const BargainScheme& scheme,
                           const Agent& u, const Agent& v, int threat, Rng& rng) {
    switch (scheme.kind) {
        case SchemeKind::Nash:
            return {nash_bargain(space, u, v, threat), std::nullopt};
        case SchemeKind::Selfish:
            return {selfish_bargain(space, u, v, threat, scheme, rng), std::nullopt};
        case SchemeKind::Unselfish:
            return unselfish_bargain(space, u, v, threat, scheme, rng);
    }
    throw std::logic_error("unknown scheme");
}

}  // namespace delib
