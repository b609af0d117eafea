#include "roofbound/states.hpp"

#include "roofbound/errors.hpp"

#include <cmath>
#include <numbers>

namespace roofbound {

namespace {

PureState ket3(int index) {
    PureState s(3);
    s.amp[index] = 1.0;
    return s;
}

PureState ghz(double sign) {
    PureState s(3);
    s.amp[0] = std::sqrt(0.5);
    s.amp[7] = sign * std::sqrt(0.5);
    return s;
}

PureState w_phase(int k) {
    PureState s(3);
    const double a = 1.0 / std::sqrt(3.0);
    s.amp[1] = a;
    s.amp[2] = std::polar(a, 2.0 * std::numbers::pi * k / 3.0);
    s.amp[4] = std::polar(a, 4.0 * std::numbers::pi * k / 3.0);
    return s;
}

// Double-excitation analogue, ascending ket order {011, 101, 110}.
PureState wbar_phase(int k) {
    PureState s(3);
    const double a = 1.0 / std::sqrt(3.0);
    s.amp[3] = a;
    s.amp[5] = std::polar(a, 2.0 * std::numbers::pi * k / 3.0);
    s.amp[6] = std::polar(a, 4.0 * std::numbers::pi * k / 3.0);
    return s;
}

PureState phi_state() {
    PureState s(3);
    const double a = 1.0 / std::sqrt(6.0);
    for (int i = 1; i <= 6; ++i) s.amp[i] = a;
    return s;
}

} // namespace

PureState make_pure(const std::string& name) {
    if (name == "ghz_plus") return ghz(1.0);
    if (name == "ghz_minus") return ghz(-1.0);
    if (name == "w") return w_phase(0);
    if (name == "phi") return phi_state();
    if (name.rfind("w_phase(", 0) == 0 && name.back() == ')') {
        const std::string arg = name.substr(8, name.size() - 9);
        if (arg.size() == 1 && arg[0] >= '0' && arg[0] <= '2')
            return w_phase(arg[0] - '0');
        throw UnknownName("make_pure: w_phase expects k in {0,1,2}");
    }
    if (name.rfind("basis(", 0) == 0 && name.back() == ')') {
        const std::string bits = name.substr(6, name.size() - 7);
        if (bits.empty() || bits.size() > 10)
            throw UnknownName("make_pure: basis expects a bit string");
        int idx = 0;
        for (char c : bits) {
            if (c != '0' && c != '1')
                throw UnknownName("make_pure: basis expects a bit string");
            idx = idx * 2 + (c - '0');
        }
        PureState s(static_cast<int>(bits.size()));
        s.amp[idx] = 1.0;
        return s;
    }
    throw UnknownName("make_pure: unknown state name '" + name + "'");
}

Ensemble w_like_ensemble(double p, WLikeBasis basis) {
    if (p < 0.0 || p > 1.0) throw BadProbability("w_like_ensemble: p outside [0,1]");
    Ensemble ens;
    ens.weights = {p, (1.0 - p) / 2.0, (1.0 - p) / 2.0};
    if (basis == WLikeBasis::product)
        ens.states = {phi_state(), ket3(0), ket3(7)};
    else
        ens.states = {phi_state(), ghz(1.0), ghz(-1.0)};
    ens.sort_ascending();
    return ens;
}

Ensemble ghz_werner_ensemble(double p, GhzWernerBasis basis) {
    if (p < 0.0 || p > 1.0) throw BadProbability("ghz_werner_ensemble: p outside [0,1]");
    Ensemble ens;
    const double w = (1.0 - p) / 8.0;
    ens.weights = {p + w, w, w, w, w, w, w, w};
    if (basis == GhzWernerBasis::product) {
        ens.states = {ghz(1.0), ghz(-1.0), ket3(1), ket3(2), ket3(3),
                      ket3(4),  ket3(5),   ket3(6)};
    } else {
        ens.states = {ghz(1.0),      ghz(-1.0),     w_phase(0),   w_phase(1),
                      w_phase(2),    wbar_phase(0), wbar_phase(1), wbar_phase(2)};
    }
    ens.sort_ascending();
    return ens;
}

} // namespace roofbound
