#include "infopower/info_measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "infopower/errors.hpp"

namespace infopower {

namespace {

double xlog2x(double x) {
    return x <= kZeroProbability ? 0.0 : x * std::log2(x);
}

/// Mutual information from joint probabilities joint(i,j) whose row sums are
/// the priors and column sums the outcome distribution.
double mutual_information_from_joint(const RealMatrix& joint) {
    const Eigen::Index rows = joint.rows();
    const Eigen::Index cols = joint.cols();
    RealVector row_sums = joint.rowwise().sum();
    RealVector col_sums = joint.colwise().sum();
    double bits = 0.0;
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            const double p = joint(i, j);
            if (p <= kZeroProbability) continue;
            bits += p * std::log2(p / (row_sums(i) * col_sums(j)));
        }
    }
    return bits;
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> entries, double tol)
    : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidDistribution("distribution must be nonempty");
    double total = 0.0;
    for (double& p : entries_) {
        if (!std::isfinite(p)) throw InvalidDistribution("non-finite probability");
        if (p < -tol) {
            std::ostringstream msg;
            msg << "negative probability " << p;
            throw InvalidDistribution(msg.str());
        }
        if (p < 0.0) p = 0.0;
        total += p;
    }
    if (std::abs(total - 1.0) > tol) {
        std::ostringstream msg;
        msg << "probabilities sum to " << total;
        throw InvalidDistribution(msg.str());
    }
    for (double& p : entries_) p /= total;
}

double shannon_entropy(const ProbabilityVector& p) {
    double h = 0.0;
    for (double x : p.entries()) h -= xlog2x(x);
    return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const RealVector spectrum = hermitian_eigenvalues(rho.matrix());
    double h = 0.0;
    for (Eigen::Index k = 0; k < spectrum.size(); ++k) h -= xlog2x(std::max(spectrum(k), 0.0));
    return h;
}

double mutual_information(const Ensemble& ensemble, const Povm& povm) {
    const RealMatrix conditional = born_matrix(ensemble, povm);
    RealMatrix joint = conditional;
    for (std::size_t i = 0; i < ensemble.size(); ++i) joint.row(i) *= ensemble.prior(i);
    return mutual_information_from_joint(joint);
}

double mutual_information(const PureEnsemble& ensemble, const Povm& povm) {
    if (ensemble.dim() != povm.dim())
        throw DimensionMismatch("ensemble and POVM dimensions differ");
    RealMatrix joint(ensemble.size(), povm.size());
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        const ComplexVector& psi = ensemble.state(i);
        for (std::size_t j = 0; j < povm.size(); ++j)
            joint(i, j) = std::max((psi.adjoint() * povm.element(j) * psi).value().real(), 0.0);
    }
    return mutual_information_from_joint(joint);
}

double holevo_quantity(const Ensemble& ensemble) {
    double chi = von_neumann_entropy(ensemble.average());
    for (std::size_t i = 0; i < ensemble.size(); ++i)
        chi -= ensemble.prior(i) * von_neumann_entropy(ensemble.state(i));
    return chi;
}

namespace {

/// Spread coalescing eigenvalues symmetrically so the subentropy product
/// formula stays finite; the induced error is O(spread).
constexpr double kDegeneracySpread = 1e-6;

std::vector<double> split_degeneracies(RealVector spectrum) {
    std::vector<double> values(spectrum.data(), spectrum.data() + spectrum.size());
    std::sort(values.begin(), values.end());
    std::vector<double> out;
    out.reserve(values.size());
    std::size_t start = 0;
    while (start < values.size()) {
        std::size_t end = start + 1;
        while (end < values.size() && values[end] - values[end - 1] < kDegeneracySpread) ++end;
        const std::size_t count = end - start;
        if (count == 1) {
            out.push_back(values[start]);
        } else {
            double mean = 0.0;
            for (std::size_t k = start; k < end; ++k) mean += values[k];
            mean /= static_cast<double>(count);
            for (std::size_t k = 0; k < count; ++k)
                out.push_back(mean + kDegeneracySpread *
                                         (static_cast<double>(k) -
                                          0.5 * static_cast<double>(count - 1)));
        }
        start = end;
    }
    return out;
}

}  // namespace

double subentropy(const DensityMatrix& rho) {
    RealVector spectrum = hermitian_eigenvalues(rho.matrix());
    for (Eigen::Index k = 0; k < spectrum.size(); ++k)
        if (spectrum(k) < 0.0) spectrum(k) = 0.0;
    const std::vector<double> lambda = split_degeneracies(spectrum);
    double q = 0.0;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        if (lambda[k] <= kZeroProbability) continue;  // λ log λ → 0
        double prefactor = 1.0;
        for (std::size_t l = 0; l < lambda.size(); ++l) {
            if (l == k) continue;
            prefactor *= lambda[k] / (lambda[k] - lambda[l]);
        }
        q -= prefactor * lambda[k] * std::log2(lambda[k]);
    }
    return q;
}

double subentropy_lower_bound(const Ensemble& ensemble) {
    double bound = subentropy(ensemble.average());
    for (std::size_t i = 0; i < ensemble.size(); ++i)
        bound -= ensemble.prior(i) * subentropy(ensemble.state(i));
    return bound;
}

BoundsReport information_bounds(const Ensemble& ensemble) {
    return {holevo_quantity(ensemble), subentropy_lower_bound(ensemble)};
}

ProbabilityVector apply_qc_channel(const Povm& povm, const DensityMatrix& rho) {
    if (povm.dim() != rho.dim())
        throw DimensionMismatch("POVM and state dimensions differ");
    std::vector<double> outcome(povm.size());
    for (std::size_t j = 0; j < povm.size(); ++j)
        outcome[j] = std::max((rho.matrix() * povm.element(j)).trace().real(), 0.0);
    return ProbabilityVector(std::move(outcome));
}

}  // namespace infopower
