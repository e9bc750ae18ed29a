#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"

using namespace infopower;
using namespace infopower::test;
using std::numbers::pi;

TEST_CASE("projective resolution validates") {
    const ComplexVector zero = basis_state(2, 0);
    const ComplexVector one = basis_state(2, 1);
    const Povm povm = validate_povm({zero * zero.adjoint(), one * one.adjoint()});
    CHECK(povm.dim() == 2);
    CHECK(povm.size() == 2);
    CHECK(completeness_deviation(povm.elements()) <= 1e-15);
}

TEST_CASE("trine elements validate through the symmetry sum") {
    std::vector<ComplexMatrix> elements;
    for (int j = 0; j < 3; ++j) {
        ComplexVector direction(2);
        direction << std::cos(pi * j / 3), std::sin(pi * j / 3);
        elements.push_back(2.0 / 3.0 * direction * direction.adjoint());
    }
    const Povm trine = validate_povm(elements);
    for (const auto& element : trine.elements()) CHECK(min_eigenvalue(element) >= -1e-12);
}

TEST_CASE("incomplete element list is rejected with the deviation") {
    const ComplexVector zero = basis_state(2, 0);
    const ComplexMatrix projector = zero * zero.adjoint();
    CHECK_THROWS_AS(validate_povm({projector, projector}), NotComplete);
    try {
        validate_povm({projector, projector});
    } catch (const NotComplete& e) {
        CHECK(e.deviation == doctest::Approx(1.0));
    }
}

TEST_CASE("non-hermitian and non-positive elements are rejected") {
    ComplexMatrix skew(2, 2);
    skew << 0.0, 1.0, -1.0, 0.0;
    CHECK_THROWS_AS(validate_povm({skew, identity(2) - skew}), NotHermitian);

    ComplexMatrix negative(2, 2);
    negative << -0.5, 0.0, 0.0, 0.5;
    try {
        validate_povm({negative, identity(2) - negative});
        CHECK(false);
    } catch (const NotPositive& e) {
        CHECK(e.index == 0);
        CHECK(e.min_eigenvalue == doctest::Approx(-0.5));
    }
}

TEST_CASE("ensemble validation") {
    const DensityMatrix zero = DensityMatrix::pure(basis_state(2, 0));
    const DensityMatrix one = DensityMatrix::pure(basis_state(2, 1));

    const Ensemble ok = validate_ensemble({{0.5, zero}, {0.5, one}});
    CHECK(ok.size() == 2);
    CHECK(ok.prior(0) == doctest::Approx(0.5));

    CHECK_THROWS_AS(validate_ensemble({{0.7, zero}, {0.7, one}}), PriorsNotNormalized);
    CHECK_THROWS_AS(validate_ensemble({{-0.5, zero}, {1.5, one}}), NegativePrior);
}

TEST_CASE("antitrine is a valid uniform ensemble") {
    const CatalogEntry trine = zn_symmetric_povm(3);
    const PureEnsemble& antitrine = trine.known_optimal_ensembles.front();
    REQUIRE(antitrine.size() == 3);
    const Ensemble as_density = antitrine.to_ensemble();
    for (std::size_t i = 0; i < 3; ++i) CHECK(as_density.prior(i) == doctest::Approx(1.0 / 3));
}

TEST_CASE("density matrix validation") {
    CHECK_THROWS_AS(DensityMatrix{identity(2)}, InvalidDensityMatrix);  // trace 2
    ComplexMatrix negative(2, 2);
    negative << 1.5, 0.0, 0.0, -0.5;
    CHECK_THROWS_AS(DensityMatrix{negative}, InvalidDensityMatrix);
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(3);
    CHECK(mixed.matrix()(0, 0).real() == doctest::Approx(1.0 / 3));
}

TEST_CASE("born matrix of a projective measurement is the identity table") {
    const PureEnsemble basis = uniform_basis_ensemble(2);
    const Povm projective = projective_povm(2).povm;
    const RealMatrix table = born_matrix(basis, projective);
    CHECK(table(0, 0) == doctest::Approx(1.0));
    CHECK(table(0, 1) == doctest::Approx(0.0));
    CHECK(table(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("born matrix rows for antitrine against trine are (0, 1/2, 1/2) cyclically") {
    // By hand: the antitrine state orthogonal to direction j hits the other
    // two trine outcomes with probability (2/3)cos²(π/6) = 1/2 each.
    const CatalogEntry trine = zn_symmetric_povm(3);
    const RealMatrix table =
        born_matrix(trine.known_optimal_ensembles.front().to_ensemble(), trine.povm);
    for (Eigen::Index i = 0; i < 3; ++i) {
        CHECK(table.row(i).sum() == doctest::Approx(1.0).epsilon(1e-10));
        int zeros = 0, halves = 0;
        for (Eigen::Index j = 0; j < 3; ++j) {
            if (std::abs(table(i, j)) < 1e-12) ++zeros;
            if (std::abs(table(i, j) - 0.5) < 1e-12) ++halves;
        }
        CHECK(zeros == 1);
        CHECK(halves == 2);
    }
}

TEST_CASE("born rows are distributions for random validated inputs") {
    for (int t = 0; t < 10; ++t) {
        const Povm povm = random_povm(3, 5, 400 + t);
        const PureEnsemble ensemble = random_pure_ensemble(3, 4, 420 + t);
        const RealMatrix table = born_matrix(ensemble, povm);
        for (Eigen::Index i = 0; i < table.rows(); ++i) {
            CHECK(table.row(i).minCoeff() >= 0.0);
            CHECK(std::abs(table.row(i).sum() - 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("single-element POVM {1} gives the all-ones column") {
    const Povm trivial = validate_povm({identity(3)});
    const PureEnsemble random = random_pure_ensemble(3, 4, 11);
    const RealMatrix table = born_matrix(random, trivial);
    for (Eigen::Index i = 0; i < table.rows(); ++i)
        CHECK(table(i, 0) == doctest::Approx(1.0));
}

TEST_CASE("tensor of projective bases is the projective basis of the product") {
    const Povm projective = projective_povm(2).povm;
    const Povm product = tensor_povm(projective, projective);
    CHECK(product.size() == 4);
    CHECK(product.dim() == 4);
    CHECK(povm_deviation(product, projective_povm(4).povm) <= 1e-14);
}

TEST_CASE("tensor of trines has nine rank-one elements and is complete") {
    const Povm trine = zn_symmetric_povm(3).povm;
    const Povm product = tensor_povm(trine, trine);
    CHECK(product.size() == 9);
    CHECK(completeness_deviation(product.elements()) <= 1e-12);
    for (const auto& element : product.elements()) {
        const RealVector spectrum = hermitian_eigenvalues(element);
        int positive = 0;
        for (Eigen::Index k = 0; k < spectrum.size(); ++k)
            if (spectrum(k) > 1e-12) ++positive;
        CHECK(positive == 1);
    }
}

TEST_CASE("padding with {1} preserves probabilities on product states") {
    const Povm trine = zn_symmetric_povm(3).povm;
    const Povm padded = tensor_povm(trine, validate_povm({identity(2)}));
    const PureEnsemble qubit = random_pure_ensemble(2, 3, 5);
    const PureEnsemble other = random_pure_ensemble(2, 1, 6);

    std::vector<ComplexVector> product_states;
    for (const auto& psi : qubit.states()) {
        ComplexVector joint(4);
        const ComplexVector& phi = other.state(0) / other.state(0).norm();
        for (Eigen::Index a = 0; a < 2; ++a)
            for (Eigen::Index b = 0; b < 2; ++b) joint(a * 2 + b) = psi(a) * phi(b);
        product_states.push_back(joint);
    }
    const PureEnsemble lifted = PureEnsemble::renormalized(product_states);
    const RealMatrix want = born_matrix(qubit, trine);
    const RealMatrix got = born_matrix(lifted, padded);
    CHECK((want - got).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("tensor probabilities factorize on product inputs") {
    const Povm a = random_povm(2, 3, 21);
    const Povm b = random_povm(3, 2, 22);
    const Povm product = tensor_povm(a, b);
    const PureEnsemble left = random_pure_ensemble(2, 2, 23);
    const PureEnsemble right = random_pure_ensemble(3, 2, 24);

    for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t l = 0; l < right.size(); ++l) {
            const ComplexVector psi = left.normalized_state(i);
            const ComplexVector phi = right.normalized_state(l);
            ComplexVector joint(6);
            for (Eigen::Index r = 0; r < 2; ++r)
                for (Eigen::Index c = 0; c < 3; ++c) joint(r * 3 + c) = psi(r) * phi(c);
            for (std::size_t j = 0; j < a.size(); ++j) {
                for (std::size_t k = 0; k < b.size(); ++k) {
                    const double p_left =
                        (psi.adjoint() * a.element(j) * psi).value().real();
                    const double p_right =
                        (phi.adjoint() * b.element(k) * phi).value().real();
                    const double p_joint =
                        (joint.adjoint() * product.element(j * b.size() + k) * joint)
                            .value()
                            .real();
                    CHECK(p_joint == doctest::Approx(p_left * p_right).epsilon(1e-10));
                }
            }
        }
    }
}

TEST_CASE("random ensembles are reproducible bit for bit") {
    const PureEnsemble first = random_pure_ensemble(2, 4, 99);
    const PureEnsemble second = random_pure_ensemble(2, 4, 99);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        for (Eigen::Index k = 0; k < first.dim(); ++k) {
            CHECK(first.state(i)(k).real() == second.state(i)(k).real());
            CHECK(first.state(i)(k).imag() == second.state(i)(k).imag());
        }
    }
    const PureEnsemble third = random_pure_ensemble(2, 4, 100);
    double difference = 0.0;
    for (std::size_t i = 0; i < first.size(); ++i)
        difference += (first.state(i) - third.state(i)).norm();
    CHECK(difference > 1e-3);
}

TEST_CASE("random ensemble weights are uniform") {
    const PureEnsemble ensemble = random_pure_ensemble(2, 4, 3);
    for (std::size_t i = 0; i < 4; ++i) CHECK(ensemble.weight(i) == doctest::Approx(0.25));
}

TEST_CASE("random states are rotation invariant in the mean") {
    // Monte-Carlo check: the seed-averaged density matrix approaches 1/D.
    const Eigen::Index dim = 3;
    ComplexMatrix mean = ComplexMatrix::Zero(dim, dim);
    const int trials = 400;
    for (int t = 0; t < trials; ++t) {
        const PureEnsemble sample = random_pure_ensemble(dim, 9, 1000 + t);
        mean += sample.average().matrix();
    }
    mean /= static_cast<double>(trials);
    CHECK(max_abs(mean - ComplexMatrix::Identity(dim, dim) / 3.0) < 0.02);
}

TEST_CASE("random POVMs and unitaries are valid") {
    const Povm povm = random_povm(3, 5, 42);
    CHECK(completeness_deviation(povm.elements()) <= 1e-12);
    const ComplexMatrix u = random_unitary(3, 42);
    CHECK(max_abs(u * u.adjoint() - identity(3)) <= 1e-12);
}

TEST_CASE("pure ensemble weight conventions") {
    CHECK_THROWS_AS(PureEnsemble::from_weighted({ComplexVector::Zero(2)}), ZeroWeightState);
    const ComplexVector half = std::sqrt(0.5) * basis_state(2, 0);
    const PureEnsemble pair = PureEnsemble::from_weighted({half, half});
    CHECK(pair.weight(0) == doctest::Approx(0.5));
    CHECK(pair.normalized_state(0).norm() == doctest::Approx(1.0));
    CHECK_THROWS_AS(PureEnsemble::from_weighted({half}), PriorsNotNormalized);
}
