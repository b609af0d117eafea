#include "roofbound/linalg.hpp"

#include "roofbound/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace roofbound {

CMatrix CMatrix::identity(int dim) {
    CMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

CMatrix CMatrix::conj() const {
    CMatrix m(n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) m(r, c) = std::conj((*this)(r, c));
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
    CMatrix m(n_);
    for (int r = 0; r < n_; ++r)
        for (int k = 0; k < n_; ++k) {
            const cplx v = (*this)(r, k);
            if (v == cplx(0.0)) continue;
            for (int c = 0; c < n_; ++c) m(r, c) += v * rhs(k, c);
        }
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
    for (auto& v : a_) v *= s;
    return *this;
}

cplx CMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double CMatrix::hermiticity_defect() const {
    double d = 0.0;
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            d = std::max(d, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return d;
}

double CMatrix::antisymmetry_defect() const {
    double d = 0.0;
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            d = std::max(d, std::abs((*this)(r, c) + (*this)(c, r)));
    return d;
}

HermEig eig_hermitian(const CMatrix& m, double herm_tol) {
    const int n = m.dim();
    const double scale = std::max(1.0, m.max_abs());
    if (m.hermiticity_defect() > herm_tol * scale)
        throw NotHermitian("eig_hermitian: input not Hermitian within tolerance");

    // Work on the Hermitian average so round-off asymmetry cannot accumulate.
    CMatrix a(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    CMatrix v = CMatrix::identity(n);

    // One complex Jacobi rotation zeroing a(p,q):
    //   U = [[c, s e^{ia}], [-s e^{-ia}, c]] with e^{ia} = a_pq/|a_pq|,
    //   tan chosen from tau = (a_qq - a_pp) / (2|a_pq|).
    const int max_sweeps = 80;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(off) <= 1e-14 * scale) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = std::abs(a(p, q));
                if (apq <= 1e-300) continue;
                const cplx phase = a(p, q) / apq;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx se = s * phase;

                for (int i = 0; i < n; ++i) {           // columns: B = A U
                    const cplx aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - std::conj(se) * aiq;
                    a(i, q) = se * aip + c * aiq;
                }
                for (int j = 0; j < n; ++j) {           // rows: A' = U^dag B
                    const cplx apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - se * aqj;
                    a(q, j) = std::conj(se) * apj + c * aqj;
                }
                for (int i = 0; i < n; ++i) {           // accumulate V <- V U
                    const cplx vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - std::conj(se) * viq;
                    v(i, q) = se * vip + c * viq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    HermEig out;
    out.values.resize(n);
    out.vectors = CMatrix(n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

cplx pfaffian(const CMatrix& input) {
    const int n = input.dim();
    if (n % 2 != 0) throw OddDimension("pfaffian: dimension must be even");
    const double scale = std::max(1.0, input.max_abs());
    if (input.antisymmetry_defect() > 1e-10 * scale)
        throw NotAntisymmetric("pfaffian: input not antisymmetric within tolerance");
    if (n == 0) return 1.0;

    CMatrix a = input;
    cplx pf = 1.0;
    for (int k = 0; k + 1 < n; k += 2) {
        int piv = k + 1;
        double best = std::abs(a(k, k + 1));
        for (int j = k + 2; j < n; ++j) {
            if (std::abs(a(k, j)) > best) { best = std::abs(a(k, j)); piv = j; }
        }
        if (best <= 1e-300) return 0.0;
        if (piv != k + 1) {
            for (int i = 0; i < n; ++i) std::swap(a(i, piv), a(i, k + 1));
            for (int i = 0; i < n; ++i) std::swap(a(piv, i), a(k + 1, i));
            pf = -pf;
        }
        const cplx pivot = a(k, k + 1);
        pf *= pivot;
        for (int j = k + 2; j < n; ++j) {
            const cplx f = a(k, j) / pivot;
            if (f == cplx(0.0)) continue;
            for (int i = 0; i < n; ++i) a(i, j) -= f * a(i, k + 1);
            for (int i = 0; i < n; ++i) a(j, i) -= f * a(k + 1, i);
        }
    }
    return pf;
}

cplx determinant(CMatrix a) {
    const int n = a.dim();
    cplx det = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
        if (std::abs(a(piv, k)) <= 1e-300) return 0.0;
        if (piv != k) {
            for (int c = 0; c < n; ++c) std::swap(a(piv, c), a(k, c));
            det = -det;
        }
        det *= a(k, k);
        for (int i = k + 1; i < n; ++i) {
            const cplx f = a(i, k) / a(k, k);
            if (f == cplx(0.0)) continue;
            for (int c = k; c < n; ++c) a(i, c) -= f * a(k, c);
        }
    }
    return det;
}

} // namespace roofbound
