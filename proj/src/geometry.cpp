#include "roofbound/geometry.hpp"

#include "roofbound/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace roofbound {

namespace {

// Gaussian elimination with partial pivoting for k <= 4; false when singular.
template <int K>
bool solve_small(double a[K][K], double b[K], double* out) {
    for (int col = 0; col < K; ++col) {
        int piv = col;
        for (int r = col + 1; r < K; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-13) return false;
        if (piv != col) {
            for (int c = 0; c < K; ++c) std::swap(a[piv][c], a[col][c]);
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < K; ++r) {
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (int c = col; c < K; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (int r = K - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < K; ++c) s -= a[r][c] * out[c];
        out[r] = s / a[r][r];
    }
    return true;
}

constexpr double kFeasibilityTol = 1e-9;
constexpr double kWeightTol = 1e-12;

} // namespace

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

std::optional<AxisInterval> axis_interval(std::span<const AxisPoint> points) {
    const int n = static_cast<int>(points.size());
    std::optional<AxisInterval> best;

    auto consider = [&](const std::vector<int>& sub, const std::vector<double>& mu_raw) {
        double p = 0.0;
        std::vector<double> w(n, 0.0);
        double sum = 0.0;
        for (size_t j = 0; j < sub.size(); ++j) sum += std::max(mu_raw[j], 0.0);
        if (sum <= 0.0) return;
        cplx zres = 0.0;
        for (size_t j = 0; j < sub.size(); ++j) {
            const double m = std::max(mu_raw[j], 0.0) / sum;
            w[sub[j]] += m;
            p += m * points[sub[j]].p;
            zres += m * points[sub[j]].Z;
        }
        if (std::abs(zres) > kFeasibilityTol) return;
        p = std::clamp(p, 0.0, 1.0);
        if (!best) {
            best = AxisInterval{p, p, w, w};
            return;
        }
        if (p < best->p_min) { best->p_min = p; best->witness_min = w; }
        if (p > best->p_max) { best->p_max = p; best->witness_max = w; }
    };

    for (int i = 0; i < n; ++i) {
        if (std::abs(points[i].Z) <= kFeasibilityTol)
            consider({i}, {1.0});
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // Overdetermined 3x2 system via normal equations.
            const double a0r = points[i].Z.real(), a1r = points[j].Z.real();
            const double a0i = points[i].Z.imag(), a1i = points[j].Z.imag();
            double ata[2][2] = {
                {a0r * a0r + a0i * a0i + 1.0, a0r * a1r + a0i * a1i + 1.0},
                {a0r * a1r + a0i * a1i + 1.0, a1r * a1r + a1i * a1i + 1.0}};
            double atb[2] = {1.0, 1.0};
            double mu[2];
            if (!solve_small<2>(ata, atb, mu)) continue;
            if (mu[0] < -kWeightTol || mu[1] < -kWeightTol) continue;
            consider({i, j}, {mu[0], mu[1]});
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                double a[3][3] = {
                    {points[i].Z.real(), points[j].Z.real(), points[k].Z.real()},
                    {points[i].Z.imag(), points[j].Z.imag(), points[k].Z.imag()},
                    {1.0, 1.0, 1.0}};
                double b[3] = {0.0, 0.0, 1.0};
                double mu[3];
                if (!solve_small<3>(a, b, mu)) continue;
                if (mu[0] < -kWeightTol || mu[1] < -kWeightTol || mu[2] < -kWeightTol)
                    continue;
                consider({i, j, k}, {mu[0], mu[1], mu[2]});
            }
        }
    }
    return best;
}

std::vector<std::pair<double, double>>
lower_convex_envelope(std::span<const std::pair<double, double>> samples) {
    const int n = static_cast<int>(samples.size());
    if (n < 2) throw UnsortedInput("lower_convex_envelope: need at least 2 samples");
    for (int i = 1; i < n; ++i)
        if (!(samples[i].first > samples[i - 1].first))
            throw UnsortedInput("lower_convex_envelope: abscissae must strictly increase");

    // Lower hull, monotone chain.
    std::vector<int> hull;
    auto cross = [&](int a, int b, int c) {
        const double abx = samples[b].first - samples[a].first;
        const double aby = samples[b].second - samples[a].second;
        const double acx = samples[c].first - samples[a].first;
        const double acy = samples[c].second - samples[a].second;
        return abx * acy - aby * acx;
    };
    for (int i = 0; i < n; ++i) {
        while (hull.size() >= 2 &&
               cross(hull[hull.size() - 2], hull.back(), i) <= 0.0)
            hull.pop_back();
        hull.push_back(i);
    }

    std::vector<std::pair<double, double>> out(samples.begin(), samples.end());
    size_t seg = 0;
    for (int i = 0; i < n; ++i) {
        while (seg + 1 < hull.size() && samples[hull[seg + 1]].first < samples[i].first)
            ++seg;
        double v;
        if (seg + 1 >= hull.size()) {
            v = samples[hull.back()].second;
        } else {
            const auto& a = samples[hull[seg]];
            const auto& b = samples[hull[seg + 1]];
            const double t = (samples[i].first - a.first) / (b.first - a.first);
            v = a.second + t * (b.second - a.second);
        }
        out[i].second = std::min(v, samples[i].second);
    }
    return out;
}

HullProjection closest_point_on_hull(const Vec3& x, std::span<const Vec3> verts) {
    const int n = static_cast<int>(verts.size());
    HullProjection best;
    best.dist = std::numeric_limits<double>::infinity();

    auto try_subset = [&](const std::vector<int>& s) {
        const int k = static_cast<int>(s.size());
        std::vector<double> mu(k, 0.0);
        if (k == 1) {
            mu[0] = 1.0;
        } else {
            // Affine least squares: minimize |sum mu_j v_j - x|, sum mu = 1.
            // Substitute mu_last = 1 - sum(rest); unknowns t = mu[0..k-2].
            const Vec3 vk = verts[s[k - 1]];
            double ata[3][3] = {{0}}, atb[3] = {0};
            const int dim = k - 1;
            Vec3 cols[3];
            for (int j = 0; j < dim; ++j) cols[j] = verts[s[j]] - vk;
            const Vec3 rhs = x - vk;
            for (int i = 0; i < dim; ++i) {
                for (int j = 0; j < dim; ++j) ata[i][j] = cols[i].dot(cols[j]);
                atb[i] = cols[i].dot(rhs);
            }
            double t[3] = {0, 0, 0};
            bool ok = false;
            if (dim == 1) {
                if (std::abs(ata[0][0]) < 1e-18) return;
                t[0] = atb[0] / ata[0][0];
                ok = true;
            } else if (dim == 2) {
                double a2[2][2] = {{ata[0][0], ata[0][1]}, {ata[1][0], ata[1][1]}};
                double b2[2] = {atb[0], atb[1]};
                double o2[2];
                ok = solve_small<2>(a2, b2, o2);
                t[0] = o2[0]; t[1] = o2[1];
            } else {
                double o3[3];
                ok = solve_small<3>(ata, atb, o3);
                t[0] = o3[0]; t[1] = o3[1]; t[2] = o3[2];
            }
            if (!ok) return;
            double rest = 1.0;
            for (int j = 0; j < dim; ++j) { mu[j] = t[j]; rest -= t[j]; }
            mu[k - 1] = rest;
        }
        double s0 = 0.0;
        for (double m : mu) {
            if (m < -kWeightTol) return;
            s0 += std::max(m, 0.0);
        }
        Vec3 pt{0, 0, 0};
        std::vector<double> w(n, 0.0);
        for (int j = 0; j < k; ++j) {
            const double m = std::max(mu[j], 0.0) / s0;
            w[s[j]] = m;
            pt = pt + verts[s[j]] * m;
        }
        const double d = (pt - x).norm();
        if (d < best.dist) best = HullProjection{pt, d, w};
    };

    for (int i = 0; i < n; ++i) try_subset({i});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) try_subset({i, j});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) try_subset({i, j, k});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) try_subset({i, j, k, l});
    return best;
}

} // namespace roofbound
