#include "roofbound/measures.hpp"

#include "roofbound/errors.hpp"

#include <algorithm>
#include <cmath>

namespace roofbound {

double PureState::norm() const {
    double s = 0.0;
    for (const auto& a : amp) s += std::norm(a);
    return std::sqrt(s);
}

PureState PureState::normalized() const {
    PureState out = *this;
    const double n = norm();
    if (n > 0.0)
        for (auto& a : out.amp) a /= n;
    return out;
}

cplx PureState::overlap(const PureState& other) const {
    cplx s = 0.0;
    for (size_t i = 0; i < amp.size(); ++i) s += std::conj(amp[i]) * other.amp[i];
    return s;
}

PureState operator*(cplx s, const PureState& psi) {
    PureState out = psi;
    for (auto& a : out.amp) a *= s;
    return out;
}

PureState operator+(const PureState& a, const PureState& b) {
    PureState out = a;
    for (size_t i = 0; i < out.amp.size(); ++i) out.amp[i] += b.amp[i];
    return out;
}

cplx tau3_invariant(const PureState& psi) {
    if (psi.n_qubits != 3)
        throw WrongQubitCount("tau3_invariant: three qubits required");
    const auto& a = psi.amp;  // |abc> -> 4a+2b+c
    const cplx d1 = a[0] * a[0] * a[7] * a[7] + a[1] * a[1] * a[6] * a[6] +
                    a[2] * a[2] * a[5] * a[5] + a[4] * a[4] * a[3] * a[3];
    const cplx d2 = a[0] * a[7] * (a[3] * a[4] + a[5] * a[2] + a[6] * a[1]) +
                    a[3] * a[4] * a[5] * a[2] + a[3] * a[4] * a[6] * a[1] +
                    a[5] * a[2] * a[6] * a[1];
    const cplx d3 = a[0] * a[6] * a[5] * a[3] + a[7] * a[1] * a[2] * a[4];
    return d1 - 2.0 * d2 + 4.0 * d3;
}

cplx concurrence_invariant(const PureState& psi) {
    if (psi.n_qubits != 2)
        throw WrongQubitCount("concurrence_invariant: two qubits required");
    const auto& a = psi.amp;
    return a[0] * a[3] - a[1] * a[2];
}

const MeasureSpec& tau3_measure() {
    static const MeasureSpec m{"tau3", 4, 4.0, tau3_invariant};
    return m;
}

const MeasureSpec& concurrence_measure() {
    static const MeasureSpec m{"concurrence", 2, 2.0, concurrence_invariant};
    return m;
}

double eval_E(const MeasureSpec& m, const PureState& psi) {
    const double e_orig = m.prefactor * std::abs(m.invariant(psi));
    return std::pow(e_orig, 2.0 / m.degree_D);
}

DensityMatrix projector(const PureState& psi) {
    const int d = psi.dim();
    DensityMatrix rho(psi.n_qubits, CMatrix(d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            rho.m(r, c) = psi.amp[r] * std::conj(psi.amp[c]);
    return rho;
}

void validate_density_matrix(const DensityMatrix& rho) {
    const int d = rho.m.dim();
    if (d != 1 << rho.n_qubits)
        throw InvalidDensityMatrix("density matrix: dimension is not 2^n");
    const double scale = std::max(1.0, rho.m.max_abs());
    if (rho.m.hermiticity_defect() > 1e-9 * scale)
        throw InvalidDensityMatrix("density matrix: not Hermitian");
    if (std::abs(rho.m.trace() - 1.0) > 1e-9)
        throw InvalidDensityMatrix("density matrix: trace differs from 1");
    const HermEig eig = eig_hermitian(rho.m);
    if (eig.values.front() < -1e-8)
        throw InvalidDensityMatrix("density matrix: negative eigenvalue");
}

double wootters_concurrence(const DensityMatrix& rho) {
    if (rho.n_qubits != 2)
        throw WrongQubitCount("wootters_concurrence: two qubits required");
    validate_density_matrix(rho);

    // flip = antidiagonal(-1, 1, 1, -1) = sigma_y (x) sigma_y in the product basis.
    CMatrix flip(4);
    flip(0, 3) = -1.0; flip(1, 2) = 1.0; flip(2, 1) = 1.0; flip(3, 0) = -1.0;

    // Hermitian route: sqrt(rho) * rho~ * sqrt(rho) shares the spectrum of
    // rho * rho~ and keeps the eigensolver in Hermitian territory.
    const HermEig e = eig_hermitian(rho.m);
    CMatrix sq(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            cplx v = 0.0;
            for (int k = 0; k < 4; ++k) {
                const double lam = std::max(e.values[k], 0.0);
                v += e.vectors(r, k) * std::sqrt(lam) * std::conj(e.vectors(c, k));
            }
            sq(r, c) = v;
        }
    const CMatrix rho_tilde = flip * rho.m.conj() * flip;
    const CMatrix a = sq * rho_tilde * sq;
    const HermEig ae = eig_hermitian(a, 1e-7);

    // Numerical zeros of the spectrum would blow up to ~1e-7 through the
    // square root; clip them before taking s_i.
    const double clip = 1e-13 * std::max(1.0, std::abs(ae.values[3]));
    double s[4];
    for (int k = 0; k < 4; ++k)
        s[k] = ae.values[k] <= clip ? 0.0 : std::sqrt(ae.values[k]);
    // ascending order from the eigensolver: s[3] is the largest
    return std::max(0.0, s[3] - s[2] - s[1] - s[0]);
}

} // namespace roofbound
