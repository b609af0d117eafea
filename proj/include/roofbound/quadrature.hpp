#pragma once

#include <functional>

namespace roofbound {

/// Adaptive Simpson integration over [0, pi]. Panels are halved until the
/// Richardson estimate of the local error drops below the assigned budget;
/// throws NoConvergence (with the best estimate) past the depth limit.
double quad_0_pi(const std::function<double(double)>& f, double tol = 1e-10);

} // namespace roofbound
