#pragma once

#include "roofbound/peeling.hpp"

#include <array>
#include <map>

namespace roofbound {

/// Transverse-field chain H = sum_i (2 lambda S^x_i S^x_{i+1} + S^z_i),
/// S^a = sigma^a / 2, periodic, thermodynamic limit. Critical at lambda = 1.
struct IsingParams {
    double lambda = 0.0;
};

/// Ground-state contraction kernel
///   G(R) = (1/pi) Int_0^pi [cos(kR)(1+l cos k) + l sin k sin(kR)] / L(k) dk,
///   L(k) = sqrt(1 + l^2 + 2 l cos k),
/// with the sign convention <sigma^z> = -G(0).
double g_function(const IsingParams& params, int R, double tol = 1e-10);

/// G(R) cached for R in [-4, 4].
struct CorrelatorTable {
    double lambda = 0.0;
    std::map<int, double> g;

    static CorrelatorTable build(const IsingParams& params, double tol = 1e-10);
    double operator()(int R) const { return g.at(R); }
};

enum class Pauli : char { I = 'i', X = 'x', Y = 'y', Z = 'z' };

Pauli pauli_from_char(char c);

struct PauliTriple {
    std::array<Pauli, 3> labels{Pauli::I, Pauli::I, Pauli::I};
    double value = 0.0;
};

/// <sigma^a_l sigma^b_{l+1} sigma^c_{l+2}> in the thermodynamic-limit ground
/// state: zero for odd x/y parity; otherwise the Pauli string is rewritten as
/// a Majorana monomial (Jordan-Wigner, strings cancelling outside the window)
/// and contracted by Wick's theorem as a Pfaffian.
PauliTriple pauli_triple(const CorrelatorTable& table, Pauli a, Pauli b, Pauli c);

/// Three adjacent-site reduced density matrix from all 64 Pauli expectations.
/// Tiny negative eigenvalues (>= -1e-6) are clipped and the trace is
/// renormalized; the clip magnitude is reported through `clip_out`.
DensityMatrix rdm3(const IsingParams& params, double* clip_out = nullptr);

/// Finite-chain exact-diagonalization cross-check: even-parity ground state
/// of the N-site periodic chain by matrix-free Lanczos, traced down to three
/// adjacent sites. N even, at most 12.
DensityMatrix ed_oracle(int n_sites, const IsingParams& params);

struct SweepRecord {
    double lambda = 0.0;
    double upper_bound = 0.0;
    double six_smallest_sum = 0.0;
    double five_smallest_sum = 0.0;
    std::array<double, 8> eigenvalues{};  // ascending
};

std::vector<SweepRecord> sweep(const std::vector<double>& lambda_grid,
                               const MeasureSpec& measure,
                               const PeelConfig& peel_config);

} // namespace roofbound
