#pragma once

#include "roofbound/zero_simplex.hpp"

#include <functional>
#include <optional>

namespace roofbound {

/// Intersection range of the zero-simplex with the central Bloch axis,
/// with convex witness weights achieving each endpoint.
struct RoofInterval {
    double p_min = 0.0, p_max = 0.0;
    std::vector<double> witness_min, witness_max;
};

enum class SurvivorKind { survivor_i, survivor_f, both_removed, no_intersection };

/// p_i within this distance of an interval endpoint counts as inside (both
/// states removed at weight zero). Sized to the accuracy of interval
/// endpoints derived from multiple roots.
inline constexpr double kIntervalEdgeTol = 4e-9;

const char* to_string(SurvivorKind k);

/// Result of the rank-two reduction on the normalized block
/// rho_12(p_i) = p_i |psi_i><psi_i| + (1-p_i) |psi_f><psi_f|.
struct SurvivorOutcome {
    SurvivorKind kind = SurvivorKind::both_removed;
    std::optional<PureState> surviving_state;
    double reduced_weight = 0.0;  // normalized survivor weight lambda~
    double bound_value = 0.0;     // lambda~ * E(psi_s); 0 when both removed
    std::optional<RoofInterval> roof;
};

std::optional<RoofInterval> interval(const ZeroSimplex& zs);

/// Rank-two bound: zero inside [p_min, p_max], affine outside with survivor
/// weight (p_min - p_i)/p_min resp. (p_i - p_max)/(1 - p_max). A precomputed
/// simplex may be passed to skip the root solve.
SurvivorOutcome bound_rank2(const PureState& psi_i, const PureState& psi_f,
                            double p_i, const MeasureSpec& measure,
                            const ZeroSimplex* precomputed = nullptr);

/// Resolver for grid points whose interval is empty (supplied by the peeling
/// layer, where the off-axis construction lives).
using OffAxisResolver = std::function<double(const PureState&, const PureState&,
                                             double, const ZeroSimplex&)>;

struct CurveSample {
    double p = 0.0;
    double raw = 0.0;
    double convexified = 0.0;
};

/// Characteristic curve of the rank-two family on a uniform p grid, together
/// with its lower convex envelope.
std::vector<CurveSample>
characteristic_curve(const PureState& psi_i, const PureState& psi_f, int steps,
                     const MeasureSpec& measure,
                     const OffAxisResolver& resolver = nullptr);

} // namespace roofbound
