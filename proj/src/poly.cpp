#include "roofbound/poly.hpp"

#include "roofbound/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace roofbound {

namespace {

constexpr double kInfinityRelThreshold = 1e-12;

cplx eval_range(const std::vector<cplx>& c, int lo, int hi, cplx z) {
    // Horner over c[lo..hi] as a polynomial in z.
    cplx acc = 0.0;
    for (int k = hi; k >= lo; --k) acc = acc * z + c[k];
    return acc;
}

cplx deriv_range(const std::vector<cplx>& c, int lo, int hi, cplx z) {
    cplx acc = 0.0;
    for (int k = hi; k > lo; --k) acc = acc * z + c[k] * static_cast<double>(k - lo);
    return acc;
}

} // namespace

int CPoly::effective_degree(double rel_tol) const {
    const double mx = max_abs_coeff();
    if (mx == 0.0) return -1;
    for (int k = declared_degree(); k >= 0; --k)
        if (std::abs(coeff[k]) > rel_tol * mx) return k;
    return -1;
}

double CPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeff) m = std::max(m, std::abs(c));
    return m;
}

cplx poly_eval(const CPoly& p, cplx z) {
    cplx acc = 0.0;
    for (int k = p.declared_degree(); k >= 0; --k) acc = acc * z + p.coeff[k];
    return acc;
}

PolyFit poly_from_samples(const std::function<cplx(cplx)>& f, int degree) {
    const int n = degree + 1;
    const double tau = 2.0 * std::numbers::pi;
    std::vector<cplx> samples(n);
    double sample_scale = 0.0;
    for (int k = 0; k < n; ++k) {
        const cplx z = std::polar(1.0, tau * k / n);
        samples[k] = f(z);
        sample_scale = std::max(sample_scale, std::abs(samples[k]));
    }

    PolyFit fit;
    fit.poly.coeff.assign(n, 0.0);
    for (int j = 0; j < n; ++j) {
        cplx c = 0.0;
        for (int k = 0; k < n; ++k)
            c += samples[k] * std::polar(1.0, -tau * j * k / n);
        fit.poly.coeff[j] = c / static_cast<double>(n);
    }

    // Probe off the interpolation nodes; aliasing from a higher true degree
    // leaves the node residual at zero but shows up here.
    double resid = 0.0;
    double probe_scale = sample_scale;
    for (int k = 0; k < n + 1; ++k) {
        const cplx w = std::polar(1.0, tau * (k + 0.5) / n);
        const cplx fv = f(w);
        probe_scale = std::max(probe_scale, std::abs(fv));
        resid = std::max(resid, std::abs(poly_eval(fit.poly, w) - fv));
    }
    fit.residual = probe_scale > 0.0 ? resid / probe_scale : resid;
    return fit;
}

RootSet poly_roots(const CPoly& p) {
    const int D = p.declared_degree();
    const double mx = p.max_abs_coeff();
    if (mx < 1e-300)
        throw IdenticallyZero("poly_roots: all coefficients vanish");
    const double thresh = kInfinityRelThreshold * mx;

    int m = -1;
    for (int k = D; k >= 0; --k)
        if (std::abs(p.coeff[k]) > thresh) { m = k; break; }
    if (m < 0) throw IdenticallyZero("poly_roots: all coefficients below threshold");

    RootSet out;
    out.infinite_count = D - m;

    // Trailing near-zero coefficients are exact roots at the origin.
    int t = m;
    for (int k = 0; k <= m; ++k)
        if (std::abs(p.coeff[k]) > thresh) { t = k; break; }
    for (int k = 0; k < t; ++k) out.finite.push_back(0.0);

    const int n = m - t;
    if (n == 0) return out;
    if (n == 1) {
        out.finite.push_back(-p.coeff[t] / p.coeff[t + 1]);
        return out;
    }

    const auto& c = p.coeff;
    double cauchy = 0.0;
    for (int k = t; k < m; ++k)
        cauchy = std::max(cauchy, std::abs(c[k] / c[m]));
    cauchy += 1.0;

    std::vector<cplx> z(n);
    const double radii[3] = {1.0, cauchy, 0.5};
    bool converged = false;
    for (int attempt = 0; attempt < 3 && !converged; ++attempt) {
        for (int j = 0; j < n; ++j)
            z[j] = std::polar(radii[attempt] * (1.0 + 0.03 * j / n),
                              2.0 * std::numbers::pi * j / n + 0.4 + 0.7 * attempt);
        for (int iter = 0; iter < 200; ++iter) {
            double max_step = 0.0;
            for (int j = 0; j < n; ++j) {
                const cplx pv = eval_range(c, t, m, z[j]);
                cplx pd = deriv_range(c, t, m, z[j]);
                if (std::abs(pd) < 1e-300) pd = 1e-300;
                const cplx w = pv / pd;
                cplx rep = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == j) continue;
                    cplx d = z[j] - z[k];
                    if (std::abs(d) < 1e-300) d = 1e-300;
                    rep += 1.0 / d;
                }
                cplx denom = 1.0 - w * rep;
                if (std::abs(denom) < 1e-300) denom = 1e-300;
                const cplx step = w / denom;
                z[j] -= step;
                max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[j])));
            }
            if (max_step < 1e-14) { converged = true; break; }
        }
    }

    // Two Newton polish steps, kept only when the residual improves.
    for (int j = 0; j < n; ++j) {
        for (int it = 0; it < 2; ++it) {
            const cplx pv = eval_range(c, t, m, z[j]);
            const cplx pd = deriv_range(c, t, m, z[j]);
            if (std::abs(pd) < 1e-300) break;
            const cplx cand = z[j] - pv / pd;
            if (std::abs(eval_range(c, t, m, cand)) < std::abs(pv)) z[j] = cand;
            else break;
        }
    }

    // An Aberth cluster around an m-fold root scatters over the cancellation
    // noise disc (radius ~ eps^{1/m}). Its centroid is a decent estimate and
    // the (m-1)-th derivative has a simple root there, so a short Newton run
    // on that derivative recovers the multiple root to machine precision.
    const auto dq_eval = [&](int q, cplx x) {
        cplx acc = 0.0;
        for (int k = m; k >= t + q; --k) {
            double fac = 1.0;
            for (int j = 0; j < q; ++j) fac *= (k - t - j);
            acc = acc * x + (k - t >= q ? fac * c[k] : cplx(0.0));
        }
        return acc;
    };
    std::vector<bool> used(n, false);
    std::vector<cplx> snapped;
    for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        std::vector<int> cluster{i};
        used[i] = true;
        for (int j = i + 1; j < n; ++j) {
            if (!used[j] &&
                std::abs(z[j] - z[i]) < 1e-4 * std::max(1.0, std::abs(z[i]))) {
                cluster.push_back(j);
                used[j] = true;
            }
        }
        if (cluster.size() == 1) {
            snapped.push_back(z[i]);
            continue;
        }
        cplx mean = 0.0;
        double diam = 0.0;
        for (int idx : cluster) mean += z[idx];
        mean /= static_cast<double>(cluster.size());
        for (int idx : cluster) diam = std::max(diam, std::abs(z[idx] - mean));

        const int mult = static_cast<int>(cluster.size());
        cplx center = mean;
        for (int it = 0; it < 8; ++it) {
            const cplx f = dq_eval(mult - 1, center);
            const cplx fp = dq_eval(mult, center);
            if (std::abs(fp) < 1e-300) break;
            const cplx step = f / fp;
            center -= step;
            if (std::abs(step) < 1e-16 * (1.0 + std::abs(center))) break;
        }
        // A cluster of merely-close simple roots has no nearby multiple root;
        // fall back to the centroid if the refinement drifted away.
        if (std::abs(center - mean) >
            std::max(4.0 * diam, 1e-7 * std::max(1.0, std::abs(mean))))
            center = mean;
        for (int k = 0; k < mult; ++k) snapped.push_back(center);
    }

    out.finite.insert(out.finite.end(), snapped.begin(), snapped.end());
    return out;
}

} // namespace roofbound
