#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"

using namespace infopower;
using namespace infopower::test;
using std::numbers::pi;

TEST_CASE("zn closed-form powers at small N") {
    CHECK(zn_symmetric_power(3) == doctest::Approx(std::log2(1.5)).epsilon(1e-14));
    CHECK(zn_symmetric_power(2) == doctest::Approx(1.0).epsilon(1e-14));
    // N=4: (1/4)log(1/4) + (1/2)log(1/2) + (1/4)log(1/4) + log 4 = 0.5.
    CHECK(zn_symmetric_power(4) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS((void)zn_symmetric_power(1), InvalidArguments);
}

TEST_CASE("every zn catalog ensemble attains the closed-form power") {
    for (int n = 2; n <= 8; ++n) {
        const CatalogEntry entry = zn_symmetric_povm(n);
        REQUIRE(entry.known_power_bits.has_value());
        CHECK(*entry.known_power_bits == doctest::Approx(zn_symmetric_power(n)));
        for (const PureEnsemble& ensemble : entry.known_optimal_ensembles)
            CHECK(mutual_information(ensemble, entry.povm) ==
                  doctest::Approx(*entry.known_power_bits).epsilon(1e-9));
    }
}

TEST_CASE("every zn catalog ensemble is stationary") {
    for (int n = 2; n <= 8; ++n) {
        const CatalogEntry entry = zn_symmetric_povm(n);
        for (const PureEnsemble& ensemble : entry.known_optimal_ensembles)
            CHECK(stationarity_residual(ensemble, entry.povm) < 1e-8);
    }
}

TEST_CASE("each zn ensemble state is orthogonal to some measurement direction") {
    for (int n : {3, 5, 8}) {
        const CatalogEntry entry = zn_symmetric_povm(n);
        std::vector<ComplexVector> directions;
        for (const auto& element : entry.povm.elements()) {
            auto [values, vectors] = hermitian_eigensystem(element);
            directions.push_back(vectors.col(vectors.cols() - 1));  // dominant direction
        }
        for (const PureEnsemble& ensemble : entry.known_optimal_ensembles) {
            for (std::size_t i = 0; i < ensemble.size(); ++i) {
                const ComplexVector psi = ensemble.normalized_state(i);
                double closest = 1e100;
                for (const ComplexVector& direction : directions)
                    closest = std::min(closest, std::abs((direction.adjoint() * psi).value()));
                CHECK(closest <= 1e-12);
            }
        }
    }
}

TEST_CASE("admissible Y arms cover exactly 0 <= p0 <= 1") {
    CHECK(zn_admissible_y_arms(3) == std::vector<int>{1, 2});
    CHECK(zn_admissible_y_arms(4) == std::vector<int>{1, 2, 3});
    CHECK(zn_admissible_y_arms(8) == std::vector<int>{2, 3, 4, 5, 6});
    CHECK_THROWS_AS((void)zn_y_shaped_ensemble(8, 1), InvalidArguments);
}

TEST_CASE("the antitrine is the N=3 Y-shaped ensemble") {
    const PureEnsemble y = zn_y_shaped_ensemble(3, 1);
    REQUIRE(y.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(y.weight(i) == doctest::Approx(1.0 / 3));
}

TEST_CASE("minimal ensembles") {
    // Even N: two basis states suffice and reach the closed form.
    const PureEnsemble even = minimal_optimal_ensemble(4);
    REQUIRE(even.size() == 2);
    CHECK(mutual_information(even, zn_symmetric_povm(4).povm) ==
          doctest::Approx(0.5).epsilon(1e-12));

    // N=3 reduces to the antitrine with p0 = 1/3.
    const PureEnsemble three = minimal_optimal_ensemble(3);
    REQUIRE(three.size() == 3);
    CHECK(three.weight(0) == doctest::Approx(1.0 / 3));

    // Odd N: three states reaching the closed form.
    const PureEnsemble five = minimal_optimal_ensemble(5);
    REQUIRE(five.size() == 3);
    CHECK(mutual_information(five, zn_symmetric_povm(5).povm) ==
          doctest::Approx(zn_symmetric_power(5)).epsilon(1e-12));
}

TEST_CASE("mirror family reduces to the trine at theta = pi/6") {
    const CatalogEntry mirror = mirror_y_povm(pi / 6);
    const CatalogEntry trine = zn_symmetric_povm(3);
    REQUIRE(mirror.known_power_bits.has_value());
    CHECK(*mirror.known_power_bits == doctest::Approx(std::log2(1.5)));
    // Elementwise equality: directions 0, π/3, −π/3 ≡ 2π/3 as projectors.
    for (std::size_t j = 0; j < 3; ++j)
        CHECK(max_abs(mirror.povm.element(j) - trine.povm.element(j)) <= 1e-12);
}

TEST_CASE("mirror family degenerates to a projective pair at theta = pi/4") {
    const CatalogEntry mirror = mirror_y_povm(pi / 4);
    CHECK(max_abs(mirror.povm.element(0)) <= 1e-12);
    REQUIRE(mirror.known_power_bits.has_value());
    CHECK(*mirror.known_power_bits == doctest::Approx(1.0));
    const PureEnsemble& optimal = mirror.known_optimal_ensembles.front();
    CHECK(mutual_information(optimal, mirror.povm) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(stationarity_residual(optimal, mirror.povm) < 1e-8);
}

TEST_CASE("mirror family is a valid POVM across its range") {
    for (double theta : {0.05, pi / 5, pi / 4}) {
        const CatalogEntry mirror = mirror_y_povm(theta);
        CHECK(completeness_deviation(mirror.povm.elements()) <= 1e-12);
        // Real and mirror-symmetric: reflection maps the element set to itself.
        ComplexMatrix reflection(2, 2);
        reflection << 1.0, 0.0, 0.0, -1.0;
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(max_abs(mirror.povm.element(j) -
                          mirror.povm.element(j).real().cast<std::complex<double>>()) <=
                  1e-14);
            const ComplexMatrix reflected =
                reflection * mirror.povm.element(j) * reflection;
            double closest = 1e100;
            for (std::size_t l = 0; l < 3; ++l)
                closest = std::min(closest, max_abs(reflected - mirror.povm.element(l)));
            CHECK(closest <= 1e-12);
        }
    }
    CHECK_THROWS_AS((void)mirror_y_povm(0.0), InvalidArguments);
    CHECK_THROWS_AS((void)mirror_y_povm(1.0), InvalidArguments);
}

TEST_CASE("qubit SIC invariant inner products") {
    const CatalogEntry sic = sic_qubit();
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t l = 0; l < 4; ++l) {
            const double product =
                (sic.povm.element(j) * sic.povm.element(l)).trace().real();
            if (j == l)
                CHECK(product == doctest::Approx(0.25).epsilon(1e-12));
            else
                CHECK(product == doctest::Approx(1.0 / 12).epsilon(1e-12));
        }
    }
}

TEST_CASE("qubit SIC known power and ensemble") {
    const CatalogEntry sic = sic_qubit();
    REQUIRE(sic.known_power_bits.has_value());
    CHECK(*sic.known_power_bits == doctest::Approx(0.4150374992788438).epsilon(1e-12));
    const PureEnsemble& antitetra = sic.known_optimal_ensembles.front();
    CHECK(mutual_information(antitetra, sic.povm) ==
          doctest::Approx(*sic.known_power_bits).epsilon(1e-12));
    CHECK(stationarity_residual(antitetra, sic.povm) < 1e-10);
}

TEST_CASE("each antitetrahedron state is orthogonal to exactly one direction") {
    const CatalogEntry sic = sic_qubit();
    const PureEnsemble& antitetra = sic.known_optimal_ensembles.front();
    std::vector<ComplexVector> directions;
    for (const auto& element : sic.povm.elements()) {
        auto [values, vectors] = hermitian_eigensystem(element);
        directions.push_back(vectors.col(vectors.cols() - 1));
    }
    for (std::size_t i = 0; i < 4; ++i) {
        const ComplexVector psi = antitetra.normalized_state(i);
        int orthogonal = 0;
        for (const ComplexVector& direction : directions)
            if (std::abs((direction.adjoint() * psi).value()) <= 1e-12) ++orthogonal;
        CHECK(orthogonal == 1);
    }
}

TEST_CASE("noisy projective catalog entries") {
    const CatalogEntry sharp = noisy_projective_povm(2, 1.0);
    CHECK(povm_deviation(sharp.povm, projective_povm(2).povm) <= 1e-14);
    CHECK(*sharp.known_power_bits == doctest::Approx(1.0));

    const CatalogEntry flat = noisy_projective_povm(3, 0.0);
    for (std::size_t j = 0; j < 3; ++j)
        CHECK(max_abs(flat.povm.element(j) - identity(3) / 3.0) <= 1e-14);
    CHECK(*flat.known_power_bits == doctest::Approx(0.0));

    const CatalogEntry half = noisy_projective_povm(2, 0.5);
    CHECK(*half.known_power_bits == doctest::Approx(0.18872187554086717));
    CHECK(mutual_information(half.known_optimal_ensembles.front(), half.povm) ==
          doctest::Approx(*half.known_power_bits).epsilon(1e-12));
    CHECK_THROWS_AS((void)noisy_projective_povm(2, 1.2), InvalidArguments);
}
