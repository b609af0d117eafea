#pragma once

#include "roofbound/geometry.hpp"
#include "roofbound/measures.hpp"
#include "roofbound/poly.hpp"

#include <optional>

namespace roofbound {

/// Point on the Bloch sphere of the {psi_i, psi_f} superposition family.
/// cos(theta) = 2p - 1; r = (2 sqrt(p(1-p)) cos phi, 2 sqrt(p(1-p)) sin phi, 2p-1).
struct BlochPoint {
    double theta = 0.0;
    double phi = 0.0;
    double p = 1.0;
    std::array<double, 3> r{0.0, 0.0, 1.0};

    static BlochPoint from_p_phi(double p, double phi);
    static BlochPoint from_vector(const Vec3& v);
};

/// The D zeros of E_orig along the superposition line psi_i + z psi_f,
/// with their axis coordinates and normalized states. Roots at infinity map
/// to (p = 0, Z = 0), i.e. the state psi_f itself. When E_orig vanishes on
/// the whole line, `all_zero_line` is set and the lists are empty.
struct ZeroSimplex {
    RootSet roots;
    std::vector<AxisPoint> axis_points;
    std::vector<PureState> zero_states;
    bool all_zero_line = false;
};

/// Solve E_orig[psi_i + z psi_f] = 0 for all D roots (infinity included).
/// Preconditions: normalized states, same qubit count, overlap below 1e-6.
ZeroSimplex solve(const PureState& psi_i, const PureState& psi_f,
                  const MeasureSpec& measure);

/// Normalized state of one zero; std::nullopt stands for z0 = infinity.
PureState zero_state(const PureState& psi_i, const PureState& psi_f,
                     std::optional<cplx> z0);

/// sqrt(p) psi_i + sqrt(1-p) e^{i phi} psi_f.
PureState bloch_state(const PureState& psi_i, const PureState& psi_f,
                      const BlochPoint& b);

} // namespace roofbound
