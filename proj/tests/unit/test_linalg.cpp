#include "roofbound/errors.hpp"
#include "roofbound/linalg.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace roofbound;
namespace rt = roofbound::testing;

TEST_CASE("eig of a diagonal matrix sorts ascending") {
    CMatrix m(3);
    m(0, 0) = 3.0; m(1, 1) = 1.0; m(2, 2) = 2.0;
    const HermEig e = eig_hermitian(m);
    CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(e.values[1] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(e.values[2] == doctest::Approx(3.0).epsilon(1e-13));
    // permuted standard basis vectors
    CHECK(std::abs(e.vectors(1, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(e.vectors(2, 1)) == doctest::Approx(1.0));
    CHECK(std::abs(e.vectors(0, 2)) == doctest::Approx(1.0));
}

TEST_CASE("eig of pauli-x gives -1, +1") {
    CMatrix m(2);
    m(0, 1) = 1.0; m(1, 0) = 1.0;
    const HermEig e = eig_hermitian(m);
    CHECK(e.values[0] == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("eig reconstruction and orthonormality on random hermitian") {
    rt::Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 8;
        CMatrix m(n);
        for (int r = 0; r < n; ++r) {
            m(r, r) = rng.gaussian();
            for (int c = r + 1; c < n; ++c) {
                m(r, c) = rng.cgaussian();
                m(c, r) = std::conj(m(r, c));
            }
        }
        const HermEig e = eig_hermitian(m);
        // reconstruction V diag V^dag
        double resid = 0.0;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                cplx v = 0.0;
                for (int k = 0; k < n; ++k)
                    v += e.vectors(r, k) * e.values[k] * std::conj(e.vectors(c, k));
                resid = std::max(resid, std::abs(v - m(r, c)));
            }
        CHECK(resid <= 1e-10 * std::max(1.0, m.max_abs()));
        // orthonormal columns
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                cplx ip = 0.0;
                for (int r = 0; r < n; ++r)
                    ip += std::conj(e.vectors(r, a)) * e.vectors(r, b);
                CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) <= 1e-10);
            }
        for (int k = 0; k + 1 < n; ++k) CHECK(e.values[k] <= e.values[k + 1]);
    }
}

TEST_CASE("eig rejects non-hermitian input") {
    CMatrix m(2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(eig_hermitian(m), NotHermitian);
}

TEST_CASE("eig is deterministic") {
    rt::Rng rng(7);
    CMatrix m(5);
    for (int r = 0; r < 5; ++r) {
        m(r, r) = rng.gaussian();
        for (int c = r + 1; c < 5; ++c) {
            m(r, c) = rng.cgaussian();
            m(c, r) = std::conj(m(r, c));
        }
    }
    const HermEig a = eig_hermitian(m);
    const HermEig b = eig_hermitian(m);
    for (int k = 0; k < 5; ++k) CHECK(a.values[k] == b.values[k]);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) CHECK(a.vectors(r, c) == b.vectors(r, c));
}

TEST_CASE("pfaffian of 2x2 block") {
    CMatrix m(2);
    m(0, 1) = cplx(2.5, -1.0);
    m(1, 0) = -m(0, 1);
    CHECK(std::abs(pfaffian(m) - cplx(2.5, -1.0)) < 1e-14);
}

TEST_CASE("pfaffian of 4x4 matches the textbook expansion") {
    rt::Rng rng(3);
    CMatrix m(4);
    for (int r = 0; r < 4; ++r)
        for (int c = r + 1; c < 4; ++c) {
            m(r, c) = rng.cgaussian();
            m(c, r) = -m(r, c);
        }
    const cplx expect = m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2);
    CHECK(std::abs(pfaffian(m) - expect) < 1e-12);
}

TEST_CASE("pfaffian squared equals determinant on random 6x6") {
    rt::Rng rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        CMatrix m(6);
        for (int r = 0; r < 6; ++r)
            for (int c = r + 1; c < 6; ++c) {
                m(r, c) = rng.cgaussian();
                m(c, r) = -m(r, c);
            }
        const cplx pf = pfaffian(m);
        const cplx det = determinant(m);
        CHECK(std::abs(pf * pf - det) <= 1e-8 * std::max(1.0, std::abs(det)));
    }
}

TEST_CASE("pfaffian sign flips under row/column swap") {
    rt::Rng rng(13);
    CMatrix m(4);
    for (int r = 0; r < 4; ++r)
        for (int c = r + 1; c < 4; ++c) {
            m(r, c) = rng.cgaussian();
            m(c, r) = -m(r, c);
        }
    CMatrix sw = m;
    for (int i = 0; i < 4; ++i) std::swap(sw(i, 0), sw(i, 1));
    for (int i = 0; i < 4; ++i) std::swap(sw(0, i), sw(1, i));
    CHECK(std::abs(pfaffian(sw) + pfaffian(m)) < 1e-12);
}

TEST_CASE("pfaffian input validation") {
    CHECK_THROWS_AS(pfaffian(CMatrix(3)), OddDimension);
    CMatrix bad(2);
    bad(0, 1) = 1.0;
    bad(1, 0) = 1.0;
    CHECK_THROWS_AS(pfaffian(bad), NotAntisymmetric);
}
