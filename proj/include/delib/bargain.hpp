#pragma once

#include <optional>
#include <utility>

#include "delib/population.hpp"
#include "delib/space.hpp"

namespace delib {

enum class SchemeKind { Nash, Selfish, Unselfish };

struct BargainScheme {
    SchemeKind kind = SchemeKind::Nash;
    double shift_scale = 0.05;  // Unselfish bliss-shift scale
    double noise_lo = 0.9;
    double noise_hi = 1.0;
};

struct BargainResult {
    int outcome = 0;
    // Present only for the Unselfish scheme: shifted bliss points of the
    // two bargaining agents, in call order (u, v).
    std::optional<std::pair<double, double>> updated_bliss;
};

// Nash product of utility gains over the threat point.
double nash_product(const DecisionSpace& space, const Agent& u, const Agent& v,
                    int threat, int o);

// Exact argmax of the Nash product over the individually rational set
// {o : d(p_u,o) <= d(p_u,t) and d(p_v,o) <= d(p_v,t)}. The threat is always
// feasible, so it is returned when nothing beats a zero product. Ties break
// to the candidate closest to the threat, then to the lower id.
int nash_bargain(const DecisionSpace& space, const Agent& u, const Agent& v,
                 int threat);

// Deterministic core of the selfish perturbation: the Nash outcome shifted
// toward the more selfish agent's bliss by weight*noise, clamped into [0,1)
// and snapped to the grid. Line spaces only.
int selfish_perturb(const DecisionSpace& space, int nash_outcome, double selfish_bliss,
                    double weight, double noise);

// Nash outcome perturbed toward the bliss point of the agent with the
// larger lambda, weighted by the lambda difference. Equal lambdas return
// the Nash outcome unchanged. Line spaces only.
int selfish_bargain(const DecisionSpace& space, const Agent& u, const Agent& v,
                    int threat, const BargainScheme& scheme, Rng& rng);

// Deterministic core of one unselfish bliss shift: moves bliss_x toward the
// midpoint destination ((b_y - b_x) + (a - b_x))/2, step capped at the
// destination displacement.
double unselfish_shift(double bliss_x, double bliss_y, double threat_coord,
                       double lambda_x, double shift_scale, double noise);

// Nash outcome returned unchanged; both agents' bliss points shift toward
// each other and the threat, weighted by 1/lambda. The second shift sees
// the first agent's already-updated bliss. Line spaces only.
BargainResult unselfish_bargain(const DecisionSpace& space, const Agent& u,
                                const Agent& v, int threat,
                                const BargainScheme& scheme, Rng& rng);

// Scheme dispatch for one deliberation round.
BargainResult bargain_step(const DecisionSpace& space, const BargainScheme& scheme,
                           const Agent& u, const Agent& v, int threat, Rng& rng);

}  // namespace delib
