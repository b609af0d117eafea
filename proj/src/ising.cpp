#include "roofbound/ising.hpp"

#include "roofbound/errors.hpp"
#include "roofbound/quadrature.hpp"
#include "roofbound/threading.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace roofbound {

double g_function(const IsingParams& params, int R, double tol) {
    const double l = params.lambda;
    auto integrand = [l, R](double k) {
        const double L2 = 1.0 + l * l + 2.0 * l * std::cos(k);
        const double L = std::sqrt(std::max(L2, 0.0));
        if (L < 1e-12) return 0.0;  // only at lambda = 1, k = pi; limit is 0
        return (std::cos(k * R) * (1.0 + l * std::cos(k)) +
                l * std::sin(k) * std::sin(k * R)) / L;
    };
    return quad_0_pi(integrand, tol) / std::numbers::pi;
}

CorrelatorTable CorrelatorTable::build(const IsingParams& params, double tol) {
    CorrelatorTable t;
    t.lambda = params.lambda;
    for (int R = -4; R <= 4; ++R) t.g[R] = g_function(params, R, tol);
    return t;
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'i': case 'I': return Pauli::I;
        case 'x': case 'X': return Pauli::X;
        case 'y': case 'Y': return Pauli::Y;
        case 'z': case 'Z': return Pauli::Z;
    }
    throw BadLabel(std::string("pauli_from_char: bad label '") + c + "'");
}

namespace {

// Majorana generators on the 3-site window: index 2s is A_s = c^dag + c,
// index 2s + 1 is B_s = c^dag - c, with A^2 = 1 and B^2 = -1. The on-site
// dictionary is sigma^z = A B, sigma^x = (string) A, sigma^y = i (string) B;
// string parts left of the window cancel pairwise for even x/y parity.
struct MajoranaWord {
    cplx prefactor{1.0, 0.0};
    std::vector<int> gens;

    void reduce() {
        // insertion sort with anticommutation sign, then cancel equal pairs
        for (size_t i = 1; i < gens.size(); ++i) {
            size_t j = i;
            while (j > 0 && gens[j - 1] > gens[j]) {
                std::swap(gens[j - 1], gens[j]);
                prefactor = -prefactor;
                --j;
            }
        }
        std::vector<int> out;
        size_t i = 0;
        while (i < gens.size()) {
            if (i + 1 < gens.size() && gens[i] == gens[i + 1]) {
                if (gens[i] % 2 == 1) prefactor = -prefactor;  // B^2 = -1
                i += 2;
            } else {
                out.push_back(gens[i]);
                ++i;
            }
        }
        gens = std::move(out);
    }
};

MajoranaWord word_of_triple(std::array<Pauli, 3> labels) {
    MajoranaWord w;
    for (int s = 0; s < 3; ++s) {
        switch (labels[s]) {
            case Pauli::I:
                break;
            case Pauli::Z:
                w.gens.push_back(2 * s);
                w.gens.push_back(2 * s + 1);
                break;
            case Pauli::X:
            case Pauli::Y:
                for (int t = 0; t < s; ++t) {
                    w.gens.push_back(2 * t);
                    w.gens.push_back(2 * t + 1);
                }
                if (labels[s] == Pauli::X) {
                    w.gens.push_back(2 * s);
                } else {
                    w.prefactor *= cplx(0.0, 1.0);
                    w.gens.push_back(2 * s + 1);
                }
                break;
        }
    }
    w.reduce();
    return w;
}

// Ground-state pair contractions: <A A> = delta, <B B> = -delta, and
// <B_m A_n> = (-1)^{n-m} G(n-m) (validated against the finite-chain oracle).
double contraction(int ga, int gb, const CorrelatorTable& g) {
    const int sa = ga / 2, ta = ga % 2;
    const int sb = gb / 2, tb = gb % 2;
    if (ta == tb) return 0.0;  // off-diagonal <AA>, <BB> vanish
    if (ta == 1) {             // <B_sa A_sb>
        const int R = sb - sa;
        return (R % 2 == 0 ? 1.0 : -1.0) * g(R);
    }
    const int R = sa - sb;     // <A_sa B_sb> = -<B_sb A_sa>
    return -(R % 2 == 0 ? 1.0 : -1.0) * g(R);
}

} // namespace

PauliTriple pauli_triple(const CorrelatorTable& table, Pauli a, Pauli b, Pauli c) {
    PauliTriple out;
    out.labels = {a, b, c};
    int xy = 0;
    for (Pauli p : out.labels)
        if (p == Pauli::X || p == Pauli::Y) ++xy;
    if (xy % 2 == 1) {
        out.value = 0.0;  // odd under the Z2 symmetry
        return out;
    }
    MajoranaWord w = word_of_triple(out.labels);
    if (w.gens.empty()) {
        out.value = w.prefactor.real();
        return out;
    }
    const int n = static_cast<int>(w.gens.size());
    CMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            m(i, j) = contraction(w.gens[i], w.gens[j], table);
            m(j, i) = -m(i, j);
        }
    out.value = (w.prefactor * pfaffian(m)).real();
    return out;
}

namespace {

CMatrix pauli_matrix(Pauli p) {
    CMatrix m(2);
    switch (p) {
        case Pauli::I: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
        case Pauli::X: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case Pauli::Y: m(0, 1) = cplx(0.0, -1.0); m(1, 0) = cplx(0.0, 1.0); break;
        case Pauli::Z: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    }
    return m;
}

CMatrix kron3(const CMatrix& a, const CMatrix& b, const CMatrix& c) {
    CMatrix out(8);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int i2 = 0; i2 < 2; ++i2)
                    for (int j2 = 0; j2 < 2; ++j2)
                        for (int k2 = 0; k2 < 2; ++k2)
                            out(4 * i + 2 * j + k, 4 * i2 + 2 * j2 + k2) =
                                a(i, i2) * b(j, j2) * c(k, k2);
    return out;
}

} // namespace

DensityMatrix rdm3(const IsingParams& params, double* clip_out) {
    const CorrelatorTable table = CorrelatorTable::build(params);
    const std::array<Pauli, 4> alphabet{Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    CMatrix rho(8);
    for (Pauli a : alphabet)
        for (Pauli b : alphabet)
            for (Pauli c : alphabet) {
                const PauliTriple t = pauli_triple(table, a, b, c);
                if (t.value == 0.0) continue;
                CMatrix op = kron3(pauli_matrix(a), pauli_matrix(b), pauli_matrix(c));
                op *= cplx(t.value / 8.0);
                rho += op;
            }

    // Hermitize, clip tiny negatives, renormalize trace.
    CMatrix herm(8);
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            herm(r, c) = 0.5 * (rho(r, c) + std::conj(rho(c, r)));
    const HermEig eig = eig_hermitian(herm);
    if (eig.values.front() < -1e-6)
        throw NotPositive("rdm3: eigenvalue below -1e-6 (correlator convention?)");
    double clip = 0.0;
    double tracesum = 0.0;
    std::vector<double> vals(8);
    for (int k = 0; k < 8; ++k) {
        vals[k] = std::max(eig.values[k], 0.0);
        clip += vals[k] - eig.values[k];
        tracesum += vals[k];
    }
    if (clip_out) *clip_out = clip;
    CMatrix out(8);
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) {
            cplx v = 0.0;
            for (int k = 0; k < 8; ++k)
                v += eig.vectors(r, k) * (vals[k] / tracesum) * std::conj(eig.vectors(c, k));
            out(r, c) = v;
        }
    return DensityMatrix(3, out);
}

DensityMatrix ed_oracle(int n_sites, const IsingParams& params) {
    if (n_sites > 12) throw TooLarge("ed_oracle: N must be at most 12");
    if (n_sites < 4 || n_sites % 2 != 0)
        throw std::invalid_argument("ed_oracle: N must be even and at least 4");
    const int N = n_sites;
    const size_t dim = size_t(1) << N;
    const double l = params.lambda;

    // Site j sits at bit (N-1-j); bit value 1 is spin down (sigma^z = -1).
    // H preserves the parity of the popcount, so a Lanczos run started in the
    // even sector stays there exactly.
    auto matvec = [&](const std::vector<double>& x, std::vector<double>& y) {
        std::fill(y.begin(), y.end(), 0.0);
        for (size_t s = 0; s < dim; ++s) {
            const double xs = x[s];
            if (xs == 0.0) continue;
            const int ones = __builtin_popcountll(s);
            y[s] += 0.5 * (N - 2 * ones) * xs;  // sum_j sigma^z_j / 2
            for (int j = 0; j < N; ++j) {
                const int j2 = (j + 1) % N;
                const size_t mask = (size_t(1) << (N - 1 - j)) | (size_t(1) << (N - 1 - j2));
                y[s ^ mask] += 0.5 * l * xs;
            }
        }
    };

    // Deterministic even-sector start vector.
    std::vector<double> v(dim, 0.0);
    {
        std::mt19937_64 gen(0x5eedULL + N);
        for (size_t s = 0; s < dim; ++s)
            if (__builtin_popcountll(s) % 2 == 0)
                v[s] = (static_cast<double>(gen() >> 11) * 0x1.0p-53) - 0.5;
        double nrm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
        for (auto& x : v) x /= nrm;
    }

    // Lanczos with full reorthogonalization.
    const int max_iter = std::min<int>(280, int(dim / 2));
    std::vector<std::vector<double>> basis;
    std::vector<double> alpha, beta;
    std::vector<double> w(dim);
    basis.push_back(v);
    for (int it = 0; it < max_iter; ++it) {
        matvec(basis[it], w);
        double a = std::inner_product(w.begin(), w.end(), basis[it].begin(), 0.0);
        alpha.push_back(a);
        for (size_t k = 0; k < dim; ++k) w[k] -= a * basis[it][k];
        if (it > 0)
            for (size_t k = 0; k < dim; ++k) w[k] -= beta[it - 1] * basis[it - 1][k];
        for (const auto& q : basis) {  // full reorthogonalization
            const double ip = std::inner_product(w.begin(), w.end(), q.begin(), 0.0);
            for (size_t k = 0; k < dim; ++k) w[k] -= ip * q[k];
        }
        const double b = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
        if (b < 1e-13) break;
        beta.push_back(b);
        std::vector<double> next(dim);
        for (size_t k = 0; k < dim; ++k) next[k] = w[k] / b;
        basis.push_back(std::move(next));
    }

    const int m = static_cast<int>(alpha.size());
    CMatrix tri(m);
    for (int i = 0; i < m; ++i) {
        tri(i, i) = alpha[i];
        if (i + 1 < m) {
            tri(i, i + 1) = beta[i];
            tri(i + 1, i) = beta[i];
        }
    }
    const HermEig te = eig_hermitian(tri);
    std::vector<double> ground(dim, 0.0);
    for (int i = 0; i < m && i < static_cast<int>(basis.size()); ++i) {
        const double coeff = te.vectors(i, 0).real();
        for (size_t k = 0; k < dim; ++k) ground[k] += coeff * basis[i][k];
    }
    double nrm = std::sqrt(std::inner_product(ground.begin(), ground.end(),
                                              ground.begin(), 0.0));
    for (auto& x : ground) x /= nrm;

    // Partial trace onto sites 0,1,2 (top three bits).
    const size_t rest = dim / 8;
    CMatrix rho(8);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            double acc = 0.0;
            for (size_t t = 0; t < rest; ++t)
                acc += ground[size_t(a) * rest + t] * ground[size_t(b) * rest + t];
            rho(a, b) = acc;
        }
    return DensityMatrix(3, rho);
}

std::vector<SweepRecord> sweep(const std::vector<double>& lambda_grid,
                               const MeasureSpec& measure,
                               const PeelConfig& peel_config) {
    std::vector<SweepRecord> records(lambda_grid.size());
    parallel_for(lambda_grid.size(), [&](size_t i) {
        const IsingParams params{lambda_grid[i]};
        const DensityMatrix rho = rdm3(params);
        const HermEig eig = eig_hermitian(rho.m);
        SweepRecord rec;
        rec.lambda = params.lambda;
        for (int k = 0; k < 8; ++k) rec.eigenvalues[k] = eig.values[k];
        rec.six_smallest_sum =
            std::accumulate(eig.values.begin(), eig.values.begin() + 6, 0.0);
        rec.five_smallest_sum =
            std::accumulate(eig.values.begin(), eig.values.begin() + 5, 0.0);
        const Ensemble ens = decompose(rho, peel_config.rank_tol);
        rec.upper_bound = peel(ens, measure, peel_config).value;
        records[i] = rec;
    });
    return records;
}

} // namespace roofbound
