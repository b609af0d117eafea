#pragma once

#include "roofbound/linalg.hpp"

#include <functional>
#include <vector>

namespace roofbound {

/// Complex polynomial, coefficients ascending: c[0] + c[1] z + ... + c[D] z^D.
struct CPoly {
    std::vector<cplx> coeff;

    int declared_degree() const { return static_cast<int>(coeff.size()) - 1; }
    /// Largest index whose coefficient exceeds the relative infinity threshold.
    int effective_degree(double rel_tol = 1e-12) const;
    double max_abs_coeff() const;
};

cplx poly_eval(const CPoly& p, cplx z);

struct PolyFit {
    CPoly poly;
    /// Max |p(w) - f(w)| over off-node probe points, relative to max |sample|.
    /// Degree overflow of `f` shows up here.
    double residual = 0.0;
};

/// Interpolate an exactly-polynomial function of degree <= D from its values
/// at the D+1 roots of unity (inverse DFT of the samples).
PolyFit poly_from_samples(const std::function<cplx(cplx)>& f, int degree);

struct RootSet {
    std::vector<cplx> finite;   // with multiplicity
    int infinite_count = 0;     // degree deficit, solutions at z = infinity
};

/// All declared-degree roots: Aberth simultaneous iteration from perturbed
/// roots of unity, two guarded Newton polish steps, then clustering of
/// near-coincident roots onto their mean (stabilizes multiple roots).
/// Throws IdenticallyZero when every coefficient is below threshold.
RootSet poly_roots(const CPoly& p);

} // namespace roofbound
