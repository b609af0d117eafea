#include "roofbound/rank2.hpp"

#include <cmath>

namespace roofbound {

const char* to_string(SurvivorKind k) {
    switch (k) {
        case SurvivorKind::survivor_i: return "survivor_i";
        case SurvivorKind::survivor_f: return "survivor_f";
        case SurvivorKind::both_removed: return "both_removed";
        case SurvivorKind::no_intersection: return "no_intersection";
    }
    return "?";
}

std::optional<RoofInterval> interval(const ZeroSimplex& zs) {
    if (zs.all_zero_line || zs.axis_points.empty()) return std::nullopt;
    auto iv = axis_interval(zs.axis_points);
    if (!iv) return std::nullopt;
    return RoofInterval{iv->p_min, iv->p_max,
                        std::move(iv->witness_min), std::move(iv->witness_max)};
}

SurvivorOutcome bound_rank2(const PureState& psi_i, const PureState& psi_f,
                            double p_i, const MeasureSpec& measure,
                            const ZeroSimplex* precomputed) {
    ZeroSimplex local;
    const ZeroSimplex* zs = precomputed;
    if (!zs) {
        local = solve(psi_i, psi_f, measure);
        zs = &local;
    }

    SurvivorOutcome out;
    if (zs->all_zero_line) {
        out.kind = SurvivorKind::both_removed;  // E vanishes on the whole line
        return out;
    }
    out.roof = interval(*zs);
    if (!out.roof) {
        out.kind = SurvivorKind::no_intersection;
        return out;
    }
    const double p_min = out.roof->p_min;
    const double p_max = out.roof->p_max;

    if (p_i >= p_min - kIntervalEdgeTol && p_i <= p_max + kIntervalEdgeTol) {
        out.kind = SurvivorKind::both_removed;
        return out;
    }
    if (p_i < p_min) {
        out.kind = SurvivorKind::survivor_f;
        out.surviving_state = psi_f;
        out.reduced_weight = (p_min - p_i) / p_min;
    } else {
        out.kind = SurvivorKind::survivor_i;
        out.surviving_state = psi_i;
        out.reduced_weight = (p_i - p_max) / (1.0 - p_max);
    }
    out.bound_value = out.reduced_weight * eval_E(measure, *out.surviving_state);
    return out;
}

std::vector<CurveSample>
characteristic_curve(const PureState& psi_i, const PureState& psi_f, int steps,
                     const MeasureSpec& measure, const OffAxisResolver& resolver) {
    const ZeroSimplex zs = solve(psi_i, psi_f, measure);
    std::vector<CurveSample> out(steps);
    std::vector<std::pair<double, double>> raw(steps);
    for (int k = 0; k < steps; ++k) {
        const double p = static_cast<double>(k) / (steps - 1);
        const SurvivorOutcome so = bound_rank2(psi_i, psi_f, p, measure, &zs);
        double v = so.bound_value;
        if (so.kind == SurvivorKind::no_intersection && resolver)
            v = resolver(psi_i, psi_f, p, zs);
        raw[k] = {p, v};
    }
    const auto env = lower_convex_envelope(raw);
    for (int k = 0; k < steps; ++k)
        out[k] = CurveSample{raw[k].first, raw[k].second, env[k].second};
    return out;
}

} // namespace roofbound
