#pragma once

#include "roofbound/linalg.hpp"

#include <functional>
#include <string>
#include <vector>

namespace roofbound {

/// Amplitudes over the computational basis, most-significant-qubit-first
/// (|abc> sits at index 4a+2b+c). May be unnormalized while evaluating
/// invariants; the algorithmic entry points normalize.
struct PureState {
    int n_qubits = 0;
    std::vector<cplx> amp;

    PureState() = default;
    explicit PureState(int nq) : n_qubits(nq), amp(size_t(1) << nq) {}

    int dim() const { return static_cast<int>(amp.size()); }
    double norm() const;
    PureState normalized() const;
    cplx overlap(const PureState& other) const;  // <this|other>
};

PureState operator*(cplx s, const PureState& psi);
PureState operator+(const PureState& a, const PureState& b);

/// A polynomial SL-invariant: P homogeneous of degree D in the amplitudes,
/// E_orig = prefactor * |P|, and the effective-degree-two evaluation
/// E = E_orig^{2/D} used by the bound machinery.
struct MeasureSpec {
    std::string name;
    int degree_D = 2;
    double prefactor = 1.0;
    std::function<cplx(const PureState&)> invariant;
};

/// Cayley hyperdeterminant monomials for three qubits; tau3 = 4 |P|.
cplx tau3_invariant(const PureState& psi);

/// Two-qubit concurrence invariant P = a00 a11 - a01 a10; C = 2 |P|.
cplx concurrence_invariant(const PureState& psi);

const MeasureSpec& tau3_measure();
const MeasureSpec& concurrence_measure();

/// E(psi) = (prefactor * |P(psi)|)^{2/D}; homogeneous of degree two.
double eval_E(const MeasureSpec& m, const PureState& psi);

struct DensityMatrix {
    int n_qubits = 0;
    CMatrix m;

    DensityMatrix() = default;
    DensityMatrix(int nq, CMatrix mat) : n_qubits(nq), m(std::move(mat)) {}
};

DensityMatrix projector(const PureState& psi);

/// Checks Hermiticity (1e-9), unit trace (1e-9) and spectrum >= -1e-8.
void validate_density_matrix(const DensityMatrix& rho);

/// Exact mixed-state concurrence, max(0, s1-s2-s3-s4) from the spectrum of
/// rho (flip rho* flip); the independent oracle for the rank-two machinery.
double wootters_concurrence(const DensityMatrix& rho);

} // namespace roofbound
