#include "roofbound/peeling.hpp"

#include "roofbound/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>

namespace roofbound {

void Ensemble::sort_ascending() {
    std::vector<int> order(weights.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return weights[a] < weights[b]; });
    std::vector<double> w;
    std::vector<PureState> s;
    for (int i : order) {
        w.push_back(weights[i]);
        s.push_back(std::move(states[i]));
    }
    weights = std::move(w);
    states = std::move(s);
}

DensityMatrix Ensemble::reconstruct() const {
    const int d = states.empty() ? 1 : states[0].dim();
    const int nq = states.empty() ? 0 : states[0].n_qubits;
    DensityMatrix rho(nq, CMatrix(d));
    for (int k = 0; k < size(); ++k)
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                rho.m(r, c) += weights[k] * states[k].amp[r] * std::conj(states[k].amp[c]);
    return rho;
}

void Ensemble::validate() const {
    double sum = 0.0;
    for (double w : weights) {
        if (w < -1e-12) throw InvalidDensityMatrix("ensemble: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-10)
        throw InvalidDensityMatrix("ensemble: weights do not sum to 1");
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (std::abs(states[a].overlap(states[b])) > 1e-8)
                throw InvalidDensityMatrix("ensemble: states not orthogonal");
}

Ensemble decompose(const DensityMatrix& rho, double rank_tol) {
    validate_density_matrix(rho);
    const HermEig eig = eig_hermitian(rho.m);
    Ensemble ens;
    const int d = rho.m.dim();
    for (int k = 0; k < d; ++k) {
        if (eig.values[k] <= rank_tol) continue;
        PureState psi(rho.n_qubits);
        for (int r = 0; r < d; ++r) psi.amp[r] = eig.vectors(r, k);
        ens.weights.push_back(eig.values[k]);
        ens.states.push_back(std::move(psi));
    }
    double sum = std::accumulate(ens.weights.begin(), ens.weights.end(), 0.0);
    if (sum <= 0.0) throw InvalidDensityMatrix("decompose: no spectral mass");
    for (double& w : ens.weights) w /= sum;
    ens.sort_ascending();
    return ens;
}

namespace {

Vec3 bloch_vec(const AxisPoint& ap) {
    return Vec3{2.0 * ap.Z.real(), 2.0 * ap.Z.imag(), 2.0 * ap.p - 1.0};
}

// x = w h + (1-w) u with |u| = 1 along the ray from h through x; returns the
// root of the quadratic lying in (0,1) and the sphere point u.
std::pair<double, Vec3> split_weight(const Vec3& x, const Vec3& h) {
    const double a = h.dot(h) - 1.0;
    const double b = 2.0 * (1.0 - x.dot(h));
    const double c = x.dot(x) - 1.0;
    double w;
    if (std::abs(a) < 1e-14) {
        w = std::abs(b) > 1e-300 ? -c / b : 0.0;
    } else {
        const double disc = std::max(b * b - 4.0 * a * c, 0.0);
        w = (-b + std::sqrt(disc)) / (2.0 * a);
    }
    w = std::clamp(w, 0.0, 1.0 - 1e-15);
    Vec3 u = (x - h * w) * (1.0 / (1.0 - w));
    return {w, u};
}

// Deterministic complex Gaussian for the Haar candidates (Box-Muller over
// mt19937_64, independent of libstdc++ distribution internals).
struct GaussSource {
    std::mt19937_64 gen;
    explicit GaussSource(std::uint64_t seed) : gen(seed) {}
    double uniform() {
        return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
    }
    cplx gaussian() {
        const double u1 = uniform(), u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return {r * std::cos(2.0 * std::numbers::pi * u2),
                r * std::sin(2.0 * std::numbers::pi * u2)};
    }
};

using StateKey = std::vector<long long>;

StateKey quantize(const PureState& psi) {
    StateKey k;
    k.reserve(2 * psi.amp.size());
    for (const auto& a : psi.amp) {
        k.push_back(std::llround(a.real() * 1e13));
        k.push_back(std::llround(a.imag() * 1e13));
    }
    return k;
}

struct PairEntry {
    ZeroSimplex zs;
    std::optional<RoofInterval> iv;
};

class PeelRun {
public:
    PeelRun(const MeasureSpec& measure, const PeelConfig& cfg)
        : measure_(measure), cfg_(cfg) {}

    double best_value = std::numeric_limits<double>::infinity();
    std::vector<PeelStep> best_steps;
    bool best_hint = false;

    void run(std::vector<double> w, std::vector<PureState> s) {
        std::vector<PeelStep> path;
        dfs(std::move(w), std::move(s), 1.0, path, false);
    }

private:
    const MeasureSpec& measure_;
    const PeelConfig& cfg_;
    std::map<std::pair<StateKey, StateKey>, PairEntry> cache_;

    const PairEntry& lookup(const PureState& si, const PureState& sf) {
        auto key = std::make_pair(quantize(si), quantize(sf));
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        PairEntry e;
        e.zs = solve(si, sf, measure_);
        if (!e.zs.all_zero_line) e.iv = interval(e.zs);
        return cache_.emplace(std::move(key), std::move(e)).first->second;
    }

    void settle(double value, const std::vector<PeelStep>& path, bool hint) {
        if (value < best_value) {
            best_value = value;
            best_steps = path;
            best_hint = hint;
        }
    }

    std::vector<std::pair<int, int>> pair_choices(const std::vector<double>& w) const {
        const int r = static_cast<int>(w.size());
        std::vector<std::pair<int, int>> pairs;
        if (cfg_.pair_search == PeelConfig::PairSearch::all_pairs && r <= 4) {
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) pairs.emplace_back(i, j);
            return pairs;
        }
        const double rtol = cfg_.degeneracy_rtol;
        const double top = w[r - 1];
        std::vector<int> top_class;
        for (int i = 0; i < r; ++i)
            if (w[i] >= top * (1.0 - rtol)) top_class.push_back(i);
        if (top_class.size() >= 2) {
            for (size_t a = 0; a < top_class.size(); ++a)
                for (size_t b = a + 1; b < top_class.size(); ++b)
                    pairs.emplace_back(top_class[a], top_class[b]);
        } else {
            const int f = top_class[0];
            const double second = w[r - 2];
            for (int i = 0; i < r; ++i)
                if (i != f && w[i] >= second * (1.0 - rtol)) pairs.emplace_back(i, f);
        }
        if (static_cast<int>(pairs.size()) > cfg_.max_tie_pairs)
            pairs.resize(cfg_.max_tie_pairs);
        return pairs;
    }

    void dfs(std::vector<double> w, std::vector<PureState> s, double fprod,
             std::vector<PeelStep>& path, bool hint) {
        if (best_value <= 0.0) return;  // nothing can beat an established zero
        const int r = static_cast<int>(w.size());
        if (r == 0) {
            settle(0.0, path, hint);
            return;
        }
        if (r == 1) {
            settle(fprod * eval_E(measure_, s[0]), path, hint);
            return;
        }

        // ascending order; stable so tie enumeration is deterministic
        std::vector<int> order(r);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return w[a] < w[b]; });
        std::vector<double> ws(r);
        std::vector<PureState> ss(r);
        for (int i = 0; i < r; ++i) {
            ws[i] = w[order[i]];
            ss[i] = std::move(s[order[i]]);
        }

        for (const auto& [ia, ib] : pair_choices(ws)) {
            const double wi = ws[ia], wf = ws[ib];
            const double S = wi + wf;
            const double p_i = wi / S;

            std::vector<double> rest_w;
            std::vector<PureState> rest_s;
            double rest_sum = 0.0;
            for (int i = 0; i < r; ++i) {
                if (i == ia || i == ib) continue;
                rest_w.push_back(ws[i]);
                rest_s.push_back(ss[i]);
                rest_sum += ws[i];
            }

            const PairEntry& pe = lookup(ss[ia], ss[ib]);
            PeelStep step;
            step.index_i = ia;
            step.index_f = ib;
            step.p_i = p_i;
            step.interval = pe.iv;

            auto recurse = [&](double fk, std::vector<double> nw,
                               std::vector<PureState> ns, bool nhint) {
                step.f_k = fk;
                path.push_back(step);
                if (fk <= 1e-15) {
                    settle(0.0, path, nhint);
                } else {
                    for (double& x : nw) x /= fk;
                    dfs(std::move(nw), std::move(ns),
                        fprod * (cfg_.effective_degree_two
                                     ? fk
                                     : std::pow(fk, measure_.degree_D / 2.0)),
                        path, nhint);
                }
                path.pop_back();
            };

            if (pe.zs.all_zero_line) {
                step.kind = SurvivorKind::both_removed;
                step.note = "all_zero_line";
                recurse(rest_sum, rest_w, rest_s, hint);
                continue;
            }
            if (pe.iv) {
                if (p_i >= pe.iv->p_min - kIntervalEdgeTol &&
                    p_i <= pe.iv->p_max + kIntervalEdgeTol) {
                    step.kind = SurvivorKind::both_removed;
                    recurse(rest_sum, rest_w, rest_s, true);
                    continue;
                }
                const bool keep_f = p_i < pe.iv->p_min;
                step.kind = keep_f ? SurvivorKind::survivor_f : SurvivorKind::survivor_i;
                const double lam_norm =
                    keep_f ? (pe.iv->p_min - p_i) / pe.iv->p_min
                           : (p_i - pe.iv->p_max) / (1.0 - pe.iv->p_max);
                const double lam = lam_norm * S;
                step.reduced_weight = lam;
                auto nw = rest_w;
                auto ns = rest_s;
                nw.push_back(lam);
                ns.push_back(keep_f ? ss[ib] : ss[ia]);
                recurse(rest_sum + lam, std::move(nw), std::move(ns), hint);
                continue;
            }

            // No axis intersection: absorb weight through an off-axis state.
            step.kind = SurvivorKind::no_intersection;
            step.off_axis = true;
            try {
                const OffAxisOutcome oa =
                    off_axis(ss[ia], ss[ib], p_i, pe.zs, measure_, cfg_);
                const double lam = oa.residual_weight * S;
                step.reduced_weight = lam;
                step.w_zero = oa.w_zero;
                auto nw = rest_w;
                auto ns = rest_s;
                nw.push_back(lam);
                ns.push_back(oa.psi_off);
                recurse(rest_sum + lam, std::move(nw), std::move(ns), hint);
            } catch (const NoFeasibleRay&) {
                // Trivial convex bound over the current mixture.
                double triv = 0.0;
                for (int i = 0; i < r; ++i) triv += ws[i] * eval_E(measure_, ss[i]);
                step.note = "trivial_fallback";
                step.f_k = 1.0;
                path.push_back(step);
                settle(fprod * triv, path, hint);
                path.pop_back();
            }
        }
    }
};

std::vector<std::vector<int>> weight_clusters(const std::vector<double>& w,
                                              double rtol) {
    std::vector<std::vector<int>> clusters;
    const int n = static_cast<int>(w.size());
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == n || std::abs(w[i] - w[i - 1]) > rtol * std::max(w[i], w[i - 1])) {
            std::vector<int> c;
            for (int j = start; j < i; ++j) c.push_back(j);
            clusters.push_back(std::move(c));
            start = i;
        }
    }
    return clusters;
}

bool computational_ket_index(const PureState& psi, int* index) {
    int found = -1;
    for (int i = 0; i < psi.dim(); ++i) {
        if (std::abs(psi.amp[i]) > 1e-9) {
            if (found >= 0) return false;
            found = i;
        }
    }
    if (found < 0) return false;
    if (std::abs(std::abs(psi.amp[found]) - 1.0) > 1e-9) return false;
    *index = found;
    return true;
}

// Support contained in a complementary index doublet {b, ~b}.
bool doublet_support(const PureState& psi, int* base) {
    const int mask = psi.dim() - 1;
    int lo = -1;
    for (int i = 0; i < psi.dim(); ++i) {
        if (std::abs(psi.amp[i]) <= 1e-9) continue;
        const int canon = std::min(i, mask - i);
        if (lo < 0) lo = canon;
        else if (canon != lo) return false;
    }
    if (lo < 0) return false;
    *base = lo;
    return true;
}

} // namespace

OffAxisOutcome off_axis(const PureState& psi_i, const PureState& psi_f,
                        double p_i, const ZeroSimplex& zs,
                        const MeasureSpec& measure, const PeelConfig& config) {
    std::vector<Vec3> verts;
    for (const auto& ap : zs.axis_points) verts.push_back(bloch_vec(ap));
    if (verts.empty()) throw NoFeasibleRay("off_axis: empty zero simplex");
    const Vec3 x{0.0, 0.0, 2.0 * p_i - 1.0};

    auto evaluate = [&](const Vec3& h) {
        return split_weight(x, h);
    };
    auto state_of = [&](const Vec3& u) {
        return bloch_state(psi_i, psi_f, BlochPoint::from_vector(u));
    };

    Vec3 h_best{0, 0, 0};
    if (config.off_axis_objective == PeelConfig::OffAxisObjective::weight_only ||
        verts.size() == 1) {
        // max w with dist(x, w hull) <= 1 - w; the left side is convex in w,
        // so feasibility is an interval and bisection is exact.
        double lo = 0.0, hi = 1.0;
        std::vector<Vec3> scaled(verts.size());
        auto feasible = [&](double wv) {
            for (size_t i = 0; i < verts.size(); ++i) scaled[i] = verts[i] * wv;
            return closest_point_on_hull(x, scaled).dist <= 1.0 - wv;
        };
        if (!feasible(0.0)) throw NoFeasibleRay("off_axis: infeasible at w = 0");
        for (int it = 0; it < 64; ++it) {
            const double mid = 0.5 * (lo + hi);
            (feasible(mid) ? lo : hi) = mid;
        }
        for (size_t i = 0; i < verts.size(); ++i) scaled[i] = verts[i] * lo;
        const HullProjection proj = closest_point_on_hull(x, scaled);
        h_best = lo > 1e-300 ? proj.point * (1.0 / lo) : verts[0];
    } else {
        // minimize (1-w) E(psi_off) over the hull: coarse barycentric grid,
        // then Nelder-Mead in softmax coordinates.
        const int n = static_cast<int>(verts.size());
        auto h_of = [&](const std::vector<double>& mu) {
            Vec3 h{0, 0, 0};
            for (int i = 0; i < n; ++i) h = h + verts[i] * mu[i];
            return h;
        };
        auto value_of = [&](const std::vector<double>& mu) {
            const auto [wv, u] = evaluate(h_of(mu));
            return (1.0 - wv) * eval_E(measure, state_of(u));
        };
        const int M = n >= 4 ? 8 : 12;
        double best_val = std::numeric_limits<double>::infinity();
        std::vector<double> best_mu(n, 1.0 / n);
        std::vector<int> counts(n, 0);
        std::function<void(int, int)> enumerate = [&](int pos, int left) {
            if (pos == n - 1) {
                counts[pos] = left;
                std::vector<double> mu(n);
                for (int i = 0; i < n; ++i) mu[i] = double(counts[i]) / M;
                const double v = value_of(mu);
                if (v < best_val) { best_val = v; best_mu = mu; }
                return;
            }
            for (int c = 0; c <= left; ++c) {
                counts[pos] = c;
                enumerate(pos + 1, left - c);
            }
        };
        enumerate(0, M);

        // Nelder-Mead over y with mu = softmax(y).
        auto mu_of_y = [&](const std::vector<double>& y) {
            double mx = *std::max_element(y.begin(), y.end());
            std::vector<double> mu(n);
            double s = 0.0;
            for (int i = 0; i < n; ++i) { mu[i] = std::exp(y[i] - mx); s += mu[i]; }
            for (double& m : mu) m /= s;
            return mu;
        };
        auto fy = [&](const std::vector<double>& y) { return value_of(mu_of_y(y)); };
        std::vector<std::vector<double>> simplex;
        std::vector<double> y0(n);
        for (int i = 0; i < n; ++i) y0[i] = std::log(std::max(best_mu[i], 1e-6));
        simplex.push_back(y0);
        for (int i = 0; i < n; ++i) {
            auto y = y0;
            y[i] += 0.5;
            simplex.push_back(y);
        }
        std::vector<double> fv(simplex.size());
        for (size_t i = 0; i < simplex.size(); ++i) fv[i] = fy(simplex[i]);
        for (int iter = 0; iter < 200; ++iter) {
            std::vector<int> idx(simplex.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fv[a] < fv[b]; });
            if (fv[idx.back()] - fv[idx.front()] < 1e-13) break;
            const int worst = idx.back();
            std::vector<double> centroid(n, 0.0);
            for (int i : idx)
                if (i != worst)
                    for (int d = 0; d < n; ++d) centroid[d] += simplex[i][d] / (simplex.size() - 1);
            auto blend = [&](double t) {
                std::vector<double> y(n);
                for (int d = 0; d < n; ++d)
                    y[d] = centroid[d] + t * (centroid[d] - simplex[worst][d]);
                return y;
            };
            auto refl = blend(1.0);
            const double fr = fy(refl);
            if (fr < fv[idx.front()]) {
                auto ex = blend(2.0);
                const double fe = fy(ex);
                if (fe < fr) { simplex[worst] = ex; fv[worst] = fe; }
                else { simplex[worst] = refl; fv[worst] = fr; }
            } else if (fr < fv[idx[idx.size() - 2]]) {
                simplex[worst] = refl; fv[worst] = fr;
            } else {
                auto con = blend(-0.5);
                const double fc = fy(con);
                if (fc < fv[worst]) { simplex[worst] = con; fv[worst] = fc; }
                else {
                    for (size_t i = 1; i < idx.size(); ++i) {
                        for (int d = 0; d < n; ++d)
                            simplex[idx[i]][d] = 0.5 * (simplex[idx[i]][d] + simplex[idx[0]][d]);
                        fv[idx[i]] = fy(simplex[idx[i]]);
                    }
                }
            }
        }
        int besti = 0;
        for (size_t i = 1; i < simplex.size(); ++i)
            if (fv[i] < fv[besti]) besti = static_cast<int>(i);
        h_best = h_of(mu_of_y(simplex[besti]));
    }

    const auto [wv, u] = evaluate(h_best);
    OffAxisOutcome out;
    const double un = u.norm();
    const Vec3 uhat = un > 1e-300 ? u * (1.0 / un) : Vec3{0, 0, 1};
    const BlochPoint bp = BlochPoint::from_vector(uhat);
    out.psi_off = state_of(uhat);
    out.theta = bp.theta;
    out.phi = bp.phi;
    out.w_zero = wv;
    out.residual_weight = 1.0 - wv;
    const Vec3 recon = h_best * wv + uhat * (1.0 - wv);
    out.membership_residual = (recon - x).norm();
    return out;
}

BoundResult peel(const Ensemble& ens, const MeasureSpec& measure,
                 const PeelConfig& config) {
    if (ens.size() == 0) throw EmptyEnsemble("peel: empty ensemble");

    std::vector<Ensemble> candidates;
    if (config.basis_search)
        candidates = basis_candidates(ens, config, config.rng_seed);
    else
        candidates.push_back(ens);

    BoundResult result;
    result.value = std::numeric_limits<double>::infinity();
    for (const Ensemble& cand : candidates) {
        PeelRun run(measure, config);
        run.run(cand.weights, cand.states);
        result.candidate_values.push_back(run.best_value);
        if (run.best_value < result.value) {
            result.value = run.best_value;
            result.steps = std::move(run.best_steps);
            result.hint_more_states = run.best_hint;
        }
    }
    return result;
}

std::vector<Ensemble> basis_candidates(const Ensemble& input,
                                       const PeelConfig& config,
                                       std::uint64_t rng_seed) {
    Ensemble ens = input;
    ens.sort_ascending();
    std::vector<Ensemble> out{ens};
    const auto clusters = weight_clusters(ens.weights, config.degeneracy_rtol);

    // Preset: recombine degenerate pairs living on one complementary ket
    // doublet, (u, v) -> ((u+v), (u-v))/sqrt(2). Sends {|0..0>,|1..1>}-type
    // pairs to their GHZ combinations and back.
    {
        Ensemble cand = ens;
        bool changed = false;
        for (const auto& cluster : clusters) {
            std::vector<char> done(cluster.size(), 0);
            for (size_t a = 0; a < cluster.size(); ++a) {
                if (done[a]) continue;
                int base_a;
                if (!doublet_support(cand.states[cluster[a]], &base_a)) continue;
                for (size_t b = a + 1; b < cluster.size(); ++b) {
                    if (done[b]) continue;
                    int base_b;
                    if (!doublet_support(cand.states[cluster[b]], &base_b)) continue;
                    if (base_b != base_a) continue;
                    const PureState u = cand.states[cluster[a]];
                    const PureState v = cand.states[cluster[b]];
                    const cplx r = std::sqrt(0.5);
                    cand.states[cluster[a]] = (r * u + r * v).normalized();
                    cand.states[cluster[b]] = (r * u + (-r) * v).normalized();
                    done[a] = done[b] = 1;
                    changed = true;
                    break;
                }
            }
        }
        if (changed) out.push_back(std::move(cand));
    }

    // Preset: discrete-Fourier (W-phase) rotation of computational kets with
    // equal excitation number inside one degenerate cluster.
    {
        Ensemble cand = ens;
        bool changed = false;
        for (const auto& cluster : clusters) {
            std::map<int, std::vector<std::pair<int, int>>> by_popcount;  // ket -> member
            for (int idx : cluster) {
                int ket;
                if (computational_ket_index(cand.states[idx], &ket))
                    by_popcount[__builtin_popcount(static_cast<unsigned>(ket))]
                        .emplace_back(ket, idx);
            }
            for (auto& [pc, members] : by_popcount) {
                const int g = static_cast<int>(members.size());
                if (g < 2) continue;
                std::sort(members.begin(), members.end());
                const int nq = cand.states[members[0].second].n_qubits;
                for (int k = 0; k < g; ++k) {
                    PureState wk(nq);
                    for (int m = 0; m < g; ++m)
                        wk.amp[members[m].first] =
                            std::polar(1.0 / std::sqrt(double(g)),
                                       2.0 * std::numbers::pi * k * m / g);
                    cand.states[members[k].second] = std::move(wk);
                }
                changed = true;
            }
        }
        if (changed) out.push_back(std::move(cand));
    }

    // Seeded Haar-random intra-cluster rotations.
    for (int t = 0; t < config.n_random_bases; ++t) {
        Ensemble cand = ens;
        GaussSource rng(rng_seed * 0x9e3779b97f4a7c15ULL + 0x100 + t);
        bool changed = false;
        for (const auto& cluster : clusters) {
            const int g = static_cast<int>(cluster.size());
            if (g < 2) continue;
            // random Gaussian matrix, Gram-Schmidt columns -> Haar unitary
            std::vector<std::vector<cplx>> u(g, std::vector<cplx>(g));
            for (int c = 0; c < g; ++c) {
                for (int r = 0; r < g; ++r) u[r][c] = rng.gaussian();
                for (int prev = 0; prev < c; ++prev) {
                    cplx ip = 0.0;
                    for (int r = 0; r < g; ++r) ip += std::conj(u[r][prev]) * u[r][c];
                    for (int r = 0; r < g; ++r) u[r][c] -= ip * u[r][prev];
                }
                double nrm = 0.0;
                for (int r = 0; r < g; ++r) nrm += std::norm(u[r][c]);
                nrm = std::sqrt(nrm);
                for (int r = 0; r < g; ++r) u[r][c] /= nrm;
            }
            std::vector<PureState> rotated;
            for (int c = 0; c < g; ++c) {
                PureState acc = u[0][c] * cand.states[cluster[0]];
                for (int r = 1; r < g; ++r)
                    acc = acc + u[r][c] * cand.states[cluster[r]];
                rotated.push_back(acc.normalized());
            }
            for (int c = 0; c < g; ++c) cand.states[cluster[c]] = std::move(rotated[c]);
            changed = true;
        }
        if (changed) out.push_back(std::move(cand));
    }
    return out;
}

RobustifyResult robustify(const Ensemble& ens, const std::vector<int>& cluster) {
    RobustifyResult res;
    res.ensemble = ens;
    if (cluster.empty()) return res;
    double mass = 0.0;
    double wmin = std::numeric_limits<double>::infinity();
    for (int idx : cluster) {
        mass += ens.weights[idx];
        wmin = std::min(wmin, ens.weights[idx]);
    }
    const double k = static_cast<double>(cluster.size());
    res.omega_min = k * wmin / mass;
    const double outside = 1.0 - mass;  // the paper's p
    res.bound_factor = outside + res.omega_min * mass;
    res.discarded_mass = mass - k * wmin;

    for (int idx : cluster) res.ensemble.weights[idx] = wmin;
    double sum = std::accumulate(res.ensemble.weights.begin(),
                                 res.ensemble.weights.end(), 0.0);
    for (double& w : res.ensemble.weights) w /= sum;
    res.ensemble.sort_ascending();
    return res;
}

} // namespace roofbound
