#include "roofbound/zero_simplex.hpp"

#include "roofbound/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace roofbound {

BlochPoint BlochPoint::from_p_phi(double p, double phi) {
    BlochPoint b;
    b.p = std::clamp(p, 0.0, 1.0);
    b.phi = phi;
    b.theta = std::acos(std::clamp(2.0 * b.p - 1.0, -1.0, 1.0));
    const double s = 2.0 * std::sqrt(b.p * (1.0 - b.p));
    b.r = {s * std::cos(phi), s * std::sin(phi), 2.0 * b.p - 1.0};
    return b;
}

BlochPoint BlochPoint::from_vector(const Vec3& v) {
    const double n = std::max(v.norm(), 1e-300);
    const double z = std::clamp(v.z / n, -1.0, 1.0);
    return from_p_phi(0.5 * (z + 1.0), std::atan2(v.y, v.x));
}

namespace {

void check_pair(const PureState& psi_i, const PureState& psi_f) {
    if (psi_i.n_qubits != psi_f.n_qubits)
        throw WrongQubitCount("zero_simplex: qubit counts differ");
    if (std::abs(psi_i.norm() - 1.0) > 1e-8 || std::abs(psi_f.norm() - 1.0) > 1e-8)
        throw std::invalid_argument("zero_simplex: states must be normalized");
    if (std::abs(psi_i.overlap(psi_f)) > 1e-6)
        throw std::invalid_argument("zero_simplex: states must be orthogonal");
}

} // namespace

ZeroSimplex solve(const PureState& psi_i, const PureState& psi_f,
                  const MeasureSpec& measure) {
    check_pair(psi_i, psi_f);
    const int D = measure.degree_D;

    auto line = [&](cplx z) { return measure.invariant(psi_i + z * psi_f); };
    PolyFit fit = poly_from_samples(line, D);

    ZeroSimplex zs;
    // Normalized inputs keep |P| = O(1); an absolute floor detects the
    // identically-vanishing line.
    const double floor = 1e-12;
    if (fit.poly.max_abs_coeff() < floor) {
        auto swapped = [&](cplx z) { return measure.invariant(psi_f + z * psi_i); };
        PolyFit fit2 = poly_from_samples(swapped, D);
        if (fit2.poly.max_abs_coeff() < floor) {
            zs.all_zero_line = true;
            return zs;
        }
        // Recover from the swapped ordering: roots invert, z -> 1/z.
        RootSet swapped_roots = poly_roots(fit2.poly);
        for (cplx z : swapped_roots.finite) {
            if (std::abs(z) < 1e-14) ++zs.roots.infinite_count;
            else zs.roots.finite.push_back(1.0 / z);
        }
        for (int k = 0; k < swapped_roots.infinite_count; ++k)
            zs.roots.finite.push_back(0.0);
    } else {
        zs.roots = poly_roots(fit.poly);
    }

    for (cplx z : zs.roots.finite) {
        const double p = 1.0 / (1.0 + std::norm(z));
        zs.axis_points.push_back(AxisPoint{p * z, p});
        zs.zero_states.push_back(zero_state(psi_i, psi_f, z));
    }
    for (int k = 0; k < zs.roots.infinite_count; ++k) {
        zs.axis_points.push_back(AxisPoint{cplx(0.0), 0.0});
        zs.zero_states.push_back(zero_state(psi_i, psi_f, std::nullopt));
    }
    return zs;
}

PureState zero_state(const PureState& psi_i, const PureState& psi_f,
                     std::optional<cplx> z0) {
    if (!z0) return psi_f;
    return (psi_i + *z0 * psi_f).normalized();
}

PureState bloch_state(const PureState& psi_i, const PureState& psi_f,
                      const BlochPoint& b) {
    const cplx phase = std::polar(1.0, b.phi);
    return (std::sqrt(b.p) * psi_i +
            (std::sqrt(1.0 - b.p) * phase) * psi_f).normalized();
}

} // namespace roofbound
