#include "roofbound/errors.hpp"
#include "roofbound/poly.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace roofbound;
namespace rt = roofbound::testing;

namespace {

// Multiset match of computed roots against expected values.
bool roots_match(std::vector<cplx> got, std::vector<cplx> want, double tol) {
    if (got.size() != want.size()) return false;
    for (const cplx w : want) {
        auto best = got.end();
        double bd = tol;
        for (auto it = got.begin(); it != got.end(); ++it) {
            if (std::abs(*it - w) < bd) { bd = std::abs(*it - w); best = it; }
        }
        if (best == got.end()) return false;
        got.erase(best);
    }
    return true;
}

} // namespace

TEST_CASE("poly_from_samples recovers z^2 - 1") {
    const PolyFit fit = poly_from_samples([](cplx z) { return z * z - 1.0; }, 2);
    CHECK(std::abs(fit.poly.coeff[0] + 1.0) < 1e-13);
    CHECK(std::abs(fit.poly.coeff[1]) < 1e-13);
    CHECK(std::abs(fit.poly.coeff[2] - 1.0) < 1e-13);
    CHECK(fit.residual < 1e-12);
}

TEST_CASE("poly_from_samples recovers a constant at higher declared degree") {
    const PolyFit fit = poly_from_samples([](cplx) { return cplx(4.0); }, 4);
    CHECK(std::abs(fit.poly.coeff[0] - 4.0) < 1e-13);
    for (int k = 1; k <= 4; ++k) CHECK(std::abs(fit.poly.coeff[k]) < 1e-13);
}

TEST_CASE("poly_from_samples reports degree overflow in the residual") {
    const PolyFit fit = poly_from_samples([](cplx z) { return z * z * z; }, 2);
    CHECK(fit.residual > 1e-3);
}

TEST_CASE("roots of (-1, 0, 1)") {
    const RootSet r = poly_roots(CPoly{{-1.0, 0.0, 1.0}});
    CHECK(r.infinite_count == 0);
    CHECK(roots_match(r.finite, {1.0, -1.0}, 1e-10));
}

TEST_CASE("degree deficit yields infinite roots") {
    const RootSet r = poly_roots(CPoly{{0.0, 1.0, 0.0}});  // p(z) = z, declared D = 2
    CHECK(r.infinite_count == 1);
    REQUIRE(r.finite.size() == 1);
    CHECK(std::abs(r.finite[0]) < 1e-12);
}

TEST_CASE("double roots of (1 - z^2)^2") {
    const RootSet r = poly_roots(CPoly{{1.0, 0.0, -2.0, 0.0, 1.0}});
    CHECK(r.infinite_count == 0);
    CHECK(roots_match(r.finite, {1.0, 1.0, -1.0, -1.0}, 1e-6));
}

TEST_CASE("identically zero polynomial throws") {
    CHECK_THROWS_AS(poly_roots(CPoly{{0.0, 0.0, 0.0}}), IdenticallyZero);
}

TEST_CASE("random quartics: completeness and residual bound") {
    rt::Rng rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        CPoly p;
        p.coeff.resize(5);
        for (auto& c : p.coeff) c = rng.cgaussian();
        if (trial % 5 == 0) p.coeff[4] = 0.0;   // exercise the deficit path
        if (trial % 7 == 0) p.coeff[0] = 0.0;   // exercise roots at the origin
        const RootSet r = poly_roots(p);
        CHECK(static_cast<int>(r.finite.size()) + r.infinite_count == 4);
        const double mx = p.max_abs_coeff();
        for (const cplx z : r.finite) {
            const double bound = 1e-8 * mx * std::pow(std::max(1.0, std::abs(z)), 4);
            CHECK(std::abs(poly_eval(p, z)) <= bound);
        }
    }
}

TEST_CASE("real-coefficient roots close under conjugation") {
    rt::Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        CPoly p;
        p.coeff.resize(5);
        for (auto& c : p.coeff) c = rng.gaussian();
        const RootSet r = poly_roots(p);
        std::vector<cplx> conj;
        for (const cplx z : r.finite) conj.push_back(std::conj(z));
        CHECK(roots_match(r.finite, conj, 1e-6));
    }
}
