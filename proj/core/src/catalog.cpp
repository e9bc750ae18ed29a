#include "infopower/catalog.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "infopower/commuting.hpp"
#include "infopower/errors.hpp"

namespace infopower {

namespace {

using std::numbers::pi;

ComplexVector qubit_direction(double angle) {
    ComplexVector v(2);
    v << std::cos(angle), std::sin(angle);
    return v;
}

/// Ensemble-side parameterization ψ(θ) = (sin θ, cos θ), orthogonal to the
/// POVM-side direction (cos θ, sin θ) at matching angle sums.
ComplexVector qubit_costate(double angle) {
    ComplexVector v(2);
    v << std::sin(angle), std::cos(angle);
    return v;
}

ComplexMatrix projector(const ComplexVector& v) {
    return v * v.adjoint();
}

double xlog2x(double x) {
    return x <= 0.0 ? 0.0 : x * std::log2(x);
}

}  // namespace

double zn_symmetric_power(int n) {
    if (n < 2) throw InvalidArguments("Z_N family needs N >= 2");
    double power = std::log2(static_cast<double>(n));
    for (int j = 0; j < n; ++j) {
        const double s = std::sin(pi * j / n);
        power += xlog2x(2.0 / n * s * s);
    }
    return power;
}

std::vector<int> zn_admissible_y_arms(int n) {
    if (n < 2) throw InvalidArguments("Z_N family needs N >= 2");
    std::vector<int> arms;
    for (int arm = 1; arm < n; ++arm)
        if (4 * arm >= n && 4 * arm <= 3 * n) arms.push_back(arm);
    return arms;
}

PureEnsemble zn_y_shaped_ensemble(int n, int arm) {
    if (n < 2) throw InvalidArguments("Z_N family needs N >= 2");
    if (arm < 1 || arm >= n || 4 * arm < n || 4 * arm > 3 * n)
        throw InvalidArguments("arm violates 0 <= p0 <= 1");
    const double angle = pi * arm / n;
    const double side_prior = 1.0 / (4.0 * std::sin(angle) * std::sin(angle));
    const double center_prior = 1.0 - 2.0 * side_prior;
    std::vector<ComplexVector> states{qubit_costate(angle), qubit_costate(-angle)};
    std::vector<double> priors{side_prior, side_prior};
    if (center_prior > 1e-15) {
        states.insert(states.begin(), qubit_costate(0.0));
        priors.insert(priors.begin(), center_prior);
    }
    return PureEnsemble::from_states(states, priors, 1e-12);
}

PureEnsemble minimal_optimal_ensemble(int n) {
    if (n < 2) throw InvalidArguments("Z_N family needs N >= 2");
    if (n % 2 == 0) {
        ComplexVector zero(2), one(2);
        zero << 1.0, 0.0;
        one << 0.0, 1.0;
        return PureEnsemble::from_states({zero, one}, {0.5, 0.5});
    }
    // Odd N: both n±1 arms closest to N/2 tie on p0; take the smaller.
    return zn_y_shaped_ensemble(n, (n - 1) / 2);
}

CatalogEntry zn_symmetric_povm(int n) {
    if (n < 2) throw InvalidArguments("Z_N family needs N >= 2");
    std::vector<ComplexMatrix> elements;
    elements.reserve(n);
    for (int j = 0; j < n; ++j)
        elements.push_back(2.0 / n * projector(qubit_direction(pi * j / n)));

    CatalogEntry entry{n == 3 ? "trine" : "zn", validate_povm(std::move(elements)),
                       zn_symmetric_power(n), {}, {}};
    entry.parameters["N"] = n;

    std::vector<ComplexVector> symmetric_states;
    std::vector<double> symmetric_priors(n, 1.0 / n);
    for (int i = 0; i < n; ++i) symmetric_states.push_back(qubit_costate(pi * i / n));
    entry.known_optimal_ensembles.push_back(
        PureEnsemble::from_states(symmetric_states, symmetric_priors));

    const std::vector<int> arms = zn_admissible_y_arms(n);
    for (int arm : arms) entry.known_optimal_ensembles.push_back(zn_y_shaped_ensemble(n, arm));
    entry.parameters["admissible_arm_min"] = arms.front();
    entry.parameters["admissible_arm_max"] = arms.back();
    return entry;
}

CatalogEntry mirror_y_povm(double theta) {
    if (!(theta > 0.0) || theta > pi / 4 + 1e-12)
        throw InvalidArguments("mirror family needs theta in (0, pi/4]");
    const double cos_sq = std::cos(theta) * std::cos(theta);
    const double center_weight = std::max(std::cos(2.0 * theta) / cos_sq, 0.0);
    const double side_weight = 1.0 / (2.0 * cos_sq);

    ComplexVector p0(2), p1(2), p2(2);
    p0 << 1.0, 0.0;
    p1 << std::sin(theta), std::cos(theta);
    p2 << std::sin(theta), -std::cos(theta);

    CatalogEntry entry{"mirror-y",
                       validate_povm({center_weight * projector(p0), side_weight * projector(p1),
                                      side_weight * projector(p2)}),
                       std::nullopt,
                       {},
                       {{"theta", theta}}};
    if (std::abs(theta - pi / 6) < 1e-12) {
        entry.known_power_bits = zn_symmetric_power(3);
        entry.known_optimal_ensembles.push_back(zn_y_shaped_ensemble(3, 1));
    } else if (std::abs(theta - pi / 4) < 1e-12) {
        // The first element vanishes and the POVM degenerates to a projective
        // measurement along the two remaining orthogonal directions.
        entry.known_power_bits = 1.0;
        entry.known_optimal_ensembles.push_back(
            PureEnsemble::from_states({p1, p2}, {0.5, 0.5}));
    }
    return entry;
}

CatalogEntry sic_qubit() {
    using namespace std::complex_literals;
    const double a = 1.0 / std::sqrt(3.0);
    const double b = std::sqrt(2.0 / 3.0);
    std::vector<ComplexVector> directions(4, ComplexVector(2));
    directions[0] << 1.0, 0.0;
    directions[1] << a, b;
    directions[2] << a, b * std::exp(2i * pi / 3.0);
    directions[3] << a, b * std::exp(4i * pi / 3.0);

    std::vector<ComplexMatrix> elements;
    elements.reserve(4);
    for (const auto& d : directions) elements.push_back(0.5 * projector(d));

    std::vector<ComplexVector> antipodes(4, ComplexVector(2));
    antipodes[0] << 0.0, 1.0;
    antipodes[1] << b, -a;
    antipodes[2] << b, a * std::exp(1i * pi / 3.0);
    antipodes[3] << b, a * std::exp(5i * pi / 3.0);

    CatalogEntry entry{"sic2", validate_povm(std::move(elements)), std::log2(4.0 / 3.0), {}, {}};
    entry.known_optimal_ensembles.push_back(
        PureEnsemble::from_states(antipodes, {0.25, 0.25, 0.25, 0.25}));
    return entry;
}

CatalogEntry noisy_projective_povm(Eigen::Index dim, double eta) {
    if (dim < 2) throw InvalidArguments("dimension must be at least 2");
    if (!(eta >= 0.0) || eta > 1.0) throw InvalidArguments("noise parameter must lie in [0, 1]");
    std::vector<ComplexMatrix> elements;
    elements.reserve(dim);
    const ComplexMatrix mixing =
        (1.0 - eta) / static_cast<double>(dim) * ComplexMatrix::Identity(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        ComplexMatrix element = mixing;
        element(j, j) += eta;
        elements.push_back(std::move(element));
    }

    CatalogEntry entry{"noisy-projective", validate_povm(std::move(elements)),
                       noisy_projective_power(dim, eta), {},
                       {{"D", static_cast<double>(dim)}, {"eta", eta}}};
    std::vector<ComplexVector> basis;
    std::vector<double> priors(dim, 1.0 / static_cast<double>(dim));
    for (Eigen::Index j = 0; j < dim; ++j) {
        ComplexVector e = ComplexVector::Zero(dim);
        e(j) = 1.0;
        basis.push_back(std::move(e));
    }
    entry.known_optimal_ensembles.push_back(PureEnsemble::from_states(basis, priors));
    return entry;
}

CatalogEntry projective_povm(Eigen::Index dim) {
    CatalogEntry entry = noisy_projective_povm(dim, 1.0);
    entry.name = "projective";
    entry.parameters.erase("eta");
    return entry;
}

}  // namespace infopower
