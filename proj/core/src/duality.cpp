#include "infopower/duality.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "infopower/errors.hpp"
#include "infopower/info_measures.hpp"

namespace infopower {

namespace {

struct Whitener {
    ComplexMatrix inverse_root;  ///< σ^{−1/2}
    double condition;            ///< λ_max / λ_min of σ
};

/// σ^{−1/2} of an invertible PSD matrix; throws SingularAverageState below
/// the singularity floor. A positive ridge is added before inversion.
Whitener inverse_sqrt(const ComplexMatrix& sigma, double ridge) {
    ComplexMatrix regularized = sigma;
    if (ridge > 0.0)
        regularized += ridge * ComplexMatrix::Identity(sigma.rows(), sigma.cols());
    auto [values, vectors] = hermitian_eigensystem(regularized);
    const double min_eig = values.minCoeff();
    if (min_eig <= kSingularTol) {
        std::ostringstream msg;
        msg << "average state is singular, min eigenvalue " << min_eig;
        throw SingularAverageState(msg.str(), min_eig);
    }
    RealVector inv_roots(values.size());
    for (Eigen::Index k = 0; k < values.size(); ++k) inv_roots(k) = 1.0 / std::sqrt(values(k));
    return {vectors * inv_roots.asDiagonal() * vectors.adjoint(),
            values.maxCoeff() / min_eig};
}

}  // namespace

Povm pretty_good_measurement(const Ensemble& s, double ridge, double tol) {
    const DensityMatrix sigma = s.average();
    const Whitener whitener = inverse_sqrt(sigma.matrix(), ridge);
    std::vector<ComplexMatrix> elements;
    elements.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        elements.push_back(s.prior(i) * whitener.inverse_root * s.state(i).matrix() *
                           whitener.inverse_root);
    // Conjugating by σ^{−1/2} amplifies roundoff by the conditioning of σ, so
    // completeness is checked against that floor; with a ridge the element
    // sum additionally falls short of the identity by up to the deficit
    // ridge·(σ_S + ridge)^{−1}, whose norm is below one.
    double tol_eff = std::max(tol, 1e-14 * whitener.condition * sigma.dim());
    if (ridge > 0.0) tol_eff += 1.0;
    return validate_povm(std::move(elements), tol_eff);
}

Povm pretty_good_measurement(const PureEnsemble& s, double ridge, double tol) {
    return pretty_good_measurement(s.to_ensemble(), ridge, tol);
}

DualEnsemble dual_ensemble(const Povm& lambda, const DensityMatrix& sigma, double tol) {
    if (lambda.dim() != sigma.dim())
        throw DimensionMismatch("POVM and state dimensions differ");
    const ComplexMatrix root = sqrt_psd(sigma.matrix());
    std::vector<std::pair<double, DensityMatrix>> items;
    std::vector<std::size_t> dropped;
    for (std::size_t j = 0; j < lambda.size(); ++j) {
        ComplexMatrix state = root * lambda.element(j) * root;
        // Normalizing by the state's own trace keeps prior and state exactly
        // consistent even for outcomes barely above the drop threshold.
        const double probability = state.trace().real();
        if (probability <= 1e-12) {
            dropped.push_back(j);
            continue;
        }
        state /= probability;
        items.emplace_back(probability, DensityMatrix(std::move(state), tol));
    }
    if (items.empty())
        throw InvalidArguments("every POVM element has zero probability on sigma");
    // Dropped outcomes remove at most 1e-12 of prior mass each.
    const double prior_tol = tol + 1e-12 * static_cast<double>(lambda.size());
    return {validate_ensemble(std::move(items), prior_tol), std::move(dropped)};
}

double duality_gap(const Ensemble& s, const Povm& lambda) {
    if (s.dim() != lambda.dim())
        throw DimensionMismatch("ensemble and POVM dimensions differ");
    const double direct = mutual_information(s, lambda);
    const Povm induced = pretty_good_measurement(s);
    const DualEnsemble dual = dual_ensemble(lambda, s.average());
    const double mirrored = mutual_information(dual.ensemble, induced);
    return std::abs(direct - mirrored);
}

double duality_gap(const PureEnsemble& s, const Povm& lambda) {
    return duality_gap(s.to_ensemble(), lambda);
}

DualPair make_dual_pair(const Ensemble& s) {
    return {pretty_good_measurement(s), s.average(), s};
}

}  // namespace infopower
