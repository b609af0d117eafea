#include "roofbound/quadrature.hpp"

#include "roofbound/errors.hpp"

#include <cmath>
#include <numbers>

namespace roofbound {

namespace {

struct Panel {
    double a, b, fa, fm, fb, simpson;
};

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, const Panel& p,
             double tol, int depth, bool& failed) {
    const double m = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + m), rm = 0.5 * (m + p.b);
    const double flm = f(lm), frm = f(rm);
    const double sl = simpson(p.fa, flm, p.fm, m - p.a);
    const double sr = simpson(p.fm, frm, p.fb, p.b - m);
    const double err = sl + sr - p.simpson;
    if (std::abs(err) <= 15.0 * tol)
        return sl + sr + err / 15.0;
    if (depth >= 48) {
        failed = true;
        return sl + sr;
    }
    const Panel left{p.a, m, p.fa, flm, p.fm, sl};
    const Panel right{m, p.b, p.fm, frm, p.fb, sr};
    return adapt(f, left, 0.5 * tol, depth + 1, failed) +
           adapt(f, right, 0.5 * tol, depth + 1, failed);
}

} // namespace

double quad_0_pi(const std::function<double(double)>& f, double tol) {
    const double pi = std::numbers::pi;
    bool failed = false;
    double total = 0.0;
    const int panels = 8;
    for (int i = 0; i < panels; ++i) {
        const double a = pi * i / panels, b = pi * (i + 1) / panels;
        const double fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
        const Panel p{a, b, fa, fm, fb, simpson(fa, fm, fb, b - a)};
        total += adapt(f, p, tol / panels, 0, failed);
    }
    if (failed)
        throw NoConvergence("quad_0_pi: max refinement depth reached", total);
    return total;
}

} // namespace roofbound
