#include "roofbound/errors.hpp"
#include "roofbound/states.hpp"

#include <doctest.h>

using namespace roofbound;

namespace {

double matrix_distance(const CMatrix& a, const CMatrix& b) {
    double d = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) d = std::max(d, std::abs(a(r, c) - b(r, c)));
    return d;
}

} // namespace

TEST_CASE("named state amplitudes") {
    const PureState ghz = make_pure("ghz_plus");
    CHECK(ghz.amp[0].real() == doctest::Approx(std::sqrt(0.5)));
    CHECK(ghz.amp[7].real() == doctest::Approx(std::sqrt(0.5)));
    for (int i = 1; i < 7; ++i) CHECK(std::abs(ghz.amp[i]) == 0.0);

    const PureState phi = make_pure("phi");
    CHECK(std::abs(phi.amp[0]) == 0.0);
    CHECK(std::abs(phi.amp[7]) == 0.0);
    for (int i = 1; i < 7; ++i)
        CHECK(std::abs(phi.amp[i]) == doctest::Approx(1.0 / std::sqrt(6.0)));

    const PureState w0 = make_pure("w_phase(0)");
    CHECK(w0.amp[1].real() == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(w0.amp[2].real() == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(w0.amp[4].real() == doctest::Approx(1.0 / std::sqrt(3.0)));

    CHECK_THROWS_AS(make_pure("nonsense"), UnknownName);
    CHECK_THROWS_AS(make_pure("w_phase(7)"), UnknownName);
}

TEST_CASE("w-like ensembles rebuild one density matrix in both bases") {
    for (double p : {0.0, 0.3, 0.6, 1.0}) {
        const Ensemble a = w_like_ensemble(p, WLikeBasis::product);
        const Ensemble b = w_like_ensemble(p, WLikeBasis::ghz);
        a.validate();
        b.validate();
        CHECK(matrix_distance(a.reconstruct().m, b.reconstruct().m) < 1e-12);
    }
    CHECK_THROWS_AS(w_like_ensemble(1.5, WLikeBasis::ghz), BadProbability);
}

TEST_CASE("ghz-werner ensembles rebuild one density matrix in both bases") {
    for (double p : {0.0, 0.3, 0.9, 1.0}) {
        const Ensemble a = ghz_werner_ensemble(p, GhzWernerBasis::product);
        const Ensemble b = ghz_werner_ensemble(p, GhzWernerBasis::w_phase);
        a.validate();
        b.validate();
        CHECK(matrix_distance(a.reconstruct().m, b.reconstruct().m) < 1e-12);
    }
    CHECK_THROWS_AS(ghz_werner_ensemble(-0.1, GhzWernerBasis::product), BadProbability);
}

TEST_CASE("ghz-werner weights match the analytic spectrum") {
    const double p = 0.5;
    const Ensemble ens = ghz_werner_ensemble(p, GhzWernerBasis::product);
    CHECK(ens.weights.back() == doctest::Approx(9.0 / 16.0));
    for (int k = 0; k + 1 < ens.size(); ++k)
        CHECK(ens.weights[k] == doctest::Approx(1.0 / 16.0));
    // eigen-decomposing the assembled matrix reproduces the same spectrum
    const HermEig eig = eig_hermitian(ens.reconstruct().m);
    CHECK(eig.values.back() == doctest::Approx(9.0 / 16.0).epsilon(1e-12));
    for (int k = 0; k + 1 < 8; ++k)
        CHECK(eig.values[k] == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
}
