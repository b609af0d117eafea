#pragma once

#include <stdexcept>
#include <string>

namespace roofbound {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitian : Error { using Error::Error; };
struct OddDimension : Error { using Error::Error; };
struct NotAntisymmetric : Error { using Error::Error; };
struct IdenticallyZero : Error { using Error::Error; };
struct UnsortedInput : Error { using Error::Error; };
struct WrongQubitCount : Error { using Error::Error; };
struct InvalidDensityMatrix : Error { using Error::Error; };
struct BadProbability : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };
struct NotPositive : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct EmptyEnsemble : Error { using Error::Error; };
struct NoFeasibleRay : Error { using Error::Error; };
struct BadLabel : Error { using Error::Error; };

/// Adaptive quadrature ran out of depth; carries the best estimate so far.
struct NoConvergence : Error {
    double best_estimate;
    NoConvergence(const std::string& msg, double best)
        : Error(msg), best_estimate(best) {}
};

} // namespace roofbound
