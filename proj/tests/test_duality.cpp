#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"

using namespace infopower;
using namespace infopower::test;
using std::numbers::pi;

TEST_CASE("pretty good measurement of a uniform orthonormal ensemble is projective") {
    const Ensemble basis = uniform_basis_ensemble(3).to_ensemble();
    const Povm induced = pretty_good_measurement(basis);
    CHECK(povm_deviation(induced, projective_povm(3).povm) <= 1e-12);
}

TEST_CASE("pretty good measurement of the antitrine points along the antitrine") {
    // σ_S = 1/2, so σ_S^{-1/2} = √2·1 and each element is (2/3)|ψ_i⟩⟨ψ_i|.
    const PureEnsemble antitrine = zn_symmetric_povm(3).known_optimal_ensembles.front();
    const Povm induced = pretty_good_measurement(antitrine);
    REQUIRE(induced.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        const ComplexVector psi = antitrine.normalized_state(i);
        const ComplexMatrix expected = (2.0 / 3.0) * psi * psi.adjoint();
        CHECK(max_abs(induced.element(i) - expected) <= 1e-12);
    }
}

TEST_CASE("singular average state is rejected with its eigenvalue") {
    const Ensemble lone = validate_ensemble({{1.0, DensityMatrix::pure(basis_state(2, 0))}});
    CHECK_THROWS_AS((void)pretty_good_measurement(lone), SingularAverageState);
    try {
        (void)pretty_good_measurement(lone);
    } catch (const SingularAverageState& e) {
        CHECK(e.min_eigenvalue <= 1e-10);
    }
    // A ridge regularizes the inverse for exploratory use.
    const Povm ridged = pretty_good_measurement(lone, 1e-6);
    CHECK(ridged.size() == 1);
}

TEST_CASE("dual ensemble of a projective basis at the maximally mixed state") {
    const DualEnsemble dual =
        dual_ensemble(projective_povm(3).povm, DensityMatrix::maximally_mixed(3));
    CHECK(dual.dropped_outcomes.empty());
    CHECK(ensemble_deviation(dual.ensemble, uniform_basis_ensemble(3).to_ensemble()) <= 1e-12);
}

TEST_CASE("dual ensemble of the trine at the maximally mixed state") {
    // Priors (2/3)(1/2) = 1/3 and states along the trine directions.
    const CatalogEntry trine = zn_symmetric_povm(3);
    const DualEnsemble dual = dual_ensemble(trine.povm, DensityMatrix::maximally_mixed(2));
    REQUIRE(dual.ensemble.size() == 3);
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(dual.ensemble.prior(j) == doctest::Approx(1.0 / 3));
        const ComplexMatrix expected = 1.5 * trine.povm.element(j);
        CHECK(max_abs(dual.ensemble.state(j).matrix() - expected) <= 1e-12);
    }
}

TEST_CASE("zero-probability outcomes are dropped with a flag") {
    // A rank-one sigma orthogonal to the second projector.
    const Povm projective = projective_povm(2).povm;
    const DensityMatrix sigma = DensityMatrix::pure(basis_state(2, 0));
    const DualEnsemble dual = dual_ensemble(projective, sigma);
    CHECK(dual.dropped_outcomes == std::vector<std::size_t>{1});
    CHECK(dual.ensemble.size() == 1);
}

TEST_CASE("duality gap vanishes on catalog pairs") {
    const CatalogEntry trine = zn_symmetric_povm(3);
    CHECK(duality_gap(trine.known_optimal_ensembles.front(), trine.povm) <= 1e-10);
    CHECK(duality_gap(uniform_basis_ensemble(3).to_ensemble(), projective_povm(3).povm) <=
          1e-10);
}

TEST_CASE("duality gap vanishes on random pairs") {
    for (Eigen::Index dim : {2, 3}) {
        for (int t = 0; t < 10; ++t) {
            const PureEnsemble s = random_pure_ensemble(dim, dim * dim, 40 + t);
            const Povm lambda = random_povm(dim, 3, 140 + t);
            CHECK(duality_gap(s, lambda) < 1e-9);
        }
    }
}

TEST_CASE("round trip: induced measurement of the dual ensemble returns the POVM") {
    for (int t = 0; t < 8; ++t) {
        const Povm lambda = random_povm(3, 4, 700 + t);
        const DensityMatrix sigma = random_density_matrix(3, 800 + t);
        const DualEnsemble dual = dual_ensemble(lambda, sigma);
        REQUIRE(dual.dropped_outcomes.empty());
        CHECK(povm_deviation(pretty_good_measurement(dual.ensemble), lambda) <= 1e-9);
    }
}

TEST_CASE("round trip: dual of the induced measurement returns the ensemble") {
    for (int t = 0; t < 8; ++t) {
        std::vector<std::pair<double, DensityMatrix>> items;
        for (std::size_t i = 0; i < 4; ++i)
            items.emplace_back(0.25, random_density_matrix(2, 900 + 5 * t + i));
        const Ensemble s = validate_ensemble(items);
        const Povm induced = pretty_good_measurement(s);
        const DualEnsemble back = dual_ensemble(induced, s.average());
        REQUIRE(back.dropped_outcomes.empty());
        CHECK(ensemble_deviation(back.ensemble, s) <= 1e-9);
    }
}

TEST_CASE("outcomes barely above the drop threshold keep exact unit traces") {
    for (double eps : {1e-11, 1e-9, 1e-6}) {
        ComplexMatrix m(2, 2);
        m << 1.0 - eps, 0.0, 0.0, eps;
        const DualEnsemble dual = dual_ensemble(projective_povm(2).povm, DensityMatrix{m});
        REQUIRE(dual.ensemble.size() == 2);
        for (std::size_t i = 0; i < dual.ensemble.size(); ++i)
            CHECK(std::abs(dual.ensemble.state(i).matrix().trace().real() - 1.0) <= 1e-14);
    }
}

TEST_CASE("induced measurements survive ill-conditioned averages") {
    ComplexVector pole(2), tilted(2);
    pole << 1.0, 0.0;
    const double eps = 1e-7;
    tilted << std::sqrt(eps), std::sqrt(1.0 - eps);
    const PureEnsemble skewed = PureEnsemble::from_states({pole, tilted}, {1.0 - eps, eps});
    const Povm induced = pretty_good_measurement(skewed);
    CHECK(completeness_deviation(induced.elements()) <= 1e-9);
}

TEST_CASE("dual pair carries the average state") {
    const PureEnsemble antitrine = zn_symmetric_povm(3).known_optimal_ensembles.front();
    const DualPair pair = make_dual_pair(antitrine.to_ensemble());
    CHECK(max_abs(pair.reference_state.matrix() - 0.5 * identity(2)) <= 1e-12);
    CHECK(pair.povm.size() == 3);
}

TEST_CASE("induced measurements preserve mirror symmetry") {
    // Mirror-symmetric ensemble: states come in σ_z-reflected pairs with
    // equal priors. The induced measurement must again map to itself under
    // the reflection.
    ComplexMatrix reflection(2, 2);
    reflection << 1.0, 0.0, 0.0, -1.0;
    ComplexVector up(2), down(2), pole(2);
    up << std::cos(0.3), std::sin(0.3);
    down = reflection * up;
    pole << 1.0, 0.0;
    const PureEnsemble mirror =
        PureEnsemble::from_states({pole, up, down}, {0.4, 0.3, 0.3});
    const Povm induced = pretty_good_measurement(mirror);

    for (std::size_t j = 0; j < induced.size(); ++j) {
        const ComplexMatrix reflected = reflection * induced.element(j) * reflection;
        double closest = 1e100;
        for (std::size_t l = 0; l < induced.size(); ++l)
            closest = std::min(closest, max_abs(reflected - induced.element(l)));
        CHECK(closest <= 1e-10);
    }
}
