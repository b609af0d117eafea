#pragma once

#include "roofbound/rank2.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace roofbound {

/// Weighted orthonormal decomposition of a density matrix. Weights ascend
/// and sum to one; states are pairwise orthogonal within 1e-8.
struct Ensemble {
    std::vector<double> weights;
    std::vector<PureState> states;

    int size() const { return static_cast<int>(weights.size()); }
    void sort_ascending();
    DensityMatrix reconstruct() const;
    /// Throws InvalidDensityMatrix on weight-sum or orthonormality violations.
    void validate() const;
};

struct PeelConfig {
    /// Run once per candidate eigenbasis (degenerate-cluster rotations) and
    /// take the minimum, as opposed to the input basis only.
    bool basis_search = true;
    int n_random_bases = 0;
    std::uint64_t rng_seed = 0;

    enum class OffAxisObjective { weight_only, weighted_E };
    OffAxisObjective off_axis_objective = OffAxisObjective::weight_only;

    enum class PairSearch { two_largest, all_pairs };
    PairSearch pair_search = PairSearch::two_largest;  // all_pairs: rank <= 4 only

    /// Cap on tie-degenerate pair choices enumerated per step.
    int max_tie_pairs = 64;
    double rank_tol = 1e-10;
    double degeneracy_rtol = 1e-9;

    /// Factor bookkeeping exponent. The effective-degree-two evaluation uses
    /// plain f_k; the relaxed-degree variant (f_k^{D/2}) is experimental and
    /// not exercised by any shipped benchmark.
    bool effective_degree_two = true;
};

struct PeelStep {
    int index_i = 0, index_f = 0;     // positions in the ascending ensemble
    double p_i = 0.0;
    std::optional<RoofInterval> interval;
    SurvivorKind kind = SurvivorKind::both_removed;
    double reduced_weight = 0.0;      // unnormalized survivor weight
    double f_k = 1.0;
    bool off_axis = false;
    double w_zero = 0.0;              // weight absorbed by the zero simplex
    std::string note;
};

/// Off-axis fallback when the zero-simplex misses the central axis: the state
/// psi_off whose ray through the block's axis point meets the hull of the
/// zero states, absorbing weight w_zero into the simplex. Keeping psi_off in
/// the mixture effectively puts three eigenstates into the decomposition.
struct OffAxisOutcome {
    PureState psi_off;
    double theta = 0.0, phi = 0.0;
    double w_zero = 0.0;
    double residual_weight = 1.0;     // 1 - w_zero
    double membership_residual = 0.0;
};

struct BoundResult {
    double value = 0.0;
    std::vector<PeelStep> steps;          // trace of the minimizing run
    std::vector<double> candidate_values; // one minimum per basis candidate
    bool hint_more_states = false;
};

/// Spectral decomposition with eigenvalues above rank_tol, renormalized.
Ensemble decompose(const DensityMatrix& rho, double rank_tol = 1e-10);

OffAxisOutcome off_axis(const PureState& psi_i, const PureState& psi_f,
                        double p_i, const ZeroSimplex& zs,
                        const MeasureSpec& measure, const PeelConfig& config);

/// The iterative upper bound: repeatedly reduce the two largest-weight states
/// through the rank-two machinery, accumulate the renormalization factors,
/// and minimize over basis candidates and tie-degenerate pair choices.
BoundResult peel(const Ensemble& ens, const MeasureSpec& measure,
                 const PeelConfig& config = {});

/// Candidate eigenbases: the input, preset rotations inside degenerate
/// clusters (complementary-ket recombination, discrete-Fourier W phases),
/// and seeded Haar-random intra-cluster rotations.
std::vector<Ensemble> basis_candidates(const Ensemble& ens,
                                       const PeelConfig& config,
                                       std::uint64_t rng_seed);

struct RobustifyResult {
    Ensemble ensemble;      // cluster weights equalized at their minimum
    double omega_min = 1.0;
    double bound_factor = 1.0;   // p + omega_min (1-p); multiplies the bound
    double discarded_mass = 0.0; // trace of the split-off perturbation
};

/// Disorder handling: replace nearly-equal cluster weights by their minimum
/// and report the scale factor for the final bound.
RobustifyResult robustify(const Ensemble& ens, const std::vector<int>& cluster);

} // namespace roofbound
