#include "infopower/states.hpp"

#include <cmath>
#include <sstream>

#include "infopower/errors.hpp"

namespace infopower {

DensityMatrix::DensityMatrix(ComplexMatrix matrix, double tol) : matrix_(std::move(matrix)) {
    if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols())
        throw InvalidDensityMatrix("density matrix must be square and nonempty");
    if (!all_finite(matrix_))
        throw InvalidDensityMatrix("density matrix has non-finite entries");
    if (double dev = hermiticity_deviation(matrix_); dev > tol) {
        std::ostringstream msg;
        msg << "density matrix is not Hermitian, deviation " << dev;
        throw InvalidDensityMatrix(msg.str());
    }
    if (double min_eig = min_eigenvalue(matrix_); min_eig < -tol) {
        std::ostringstream msg;
        msg << "density matrix has negative eigenvalue " << min_eig;
        throw InvalidDensityMatrix(msg.str());
    }
    if (double trace_dev = std::abs(matrix_.trace().real() - 1.0) + std::abs(matrix_.trace().imag());
        trace_dev > tol) {
        std::ostringstream msg;
        msg << "density matrix trace deviates from one by " << trace_dev;
        throw InvalidDensityMatrix(msg.str());
    }
}

DensityMatrix DensityMatrix::pure(const ComplexVector& state) {
    double norm2 = state.squaredNorm();
    if (!(norm2 > 0.0) || !all_finite(state))
        throw InvalidDensityMatrix("pure state must be a finite nonzero vector");
    return DensityMatrix((state * state.adjoint()) / norm2);
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
    if (dim < 1) throw InvalidArguments("dimension must be positive");
    return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix Ensemble::average() const {
    ComplexMatrix avg = ComplexMatrix::Zero(dim(), dim());
    for (std::size_t i = 0; i < size(); ++i) avg += priors_[i] * states_[i].matrix();
    return DensityMatrix(std::move(avg));
}

Ensemble validate_ensemble(std::vector<std::pair<double, DensityMatrix>> items, double tol) {
    if (items.empty()) throw InvalidEnsemble("ensemble must be nonempty");
    const Eigen::Index dim = items.front().second.dim();
    double total = 0.0;
    std::vector<double> priors;
    std::vector<DensityMatrix> states;
    priors.reserve(items.size());
    states.reserve(items.size());
    for (auto& [prior, state] : items) {
        if (state.dim() != dim)
            throw DimensionMismatch("ensemble states have mixed dimensions");
        if (prior < -tol) {
            std::ostringstream msg;
            msg << "negative prior " << prior;
            throw NegativePrior(msg.str());
        }
        double p = prior < 0.0 ? 0.0 : prior;
        total += p;
        priors.push_back(p);
        states.push_back(std::move(state));
    }
    if (std::abs(total - 1.0) > tol) {
        std::ostringstream msg;
        msg << "priors sum to " << total;
        throw PriorsNotNormalized(msg.str());
    }
    for (double& p : priors) p /= total;
    return Ensemble(std::move(priors), std::move(states));
}

PureEnsemble PureEnsemble::from_weighted(std::vector<ComplexVector> states, double tol) {
    if (states.empty()) throw InvalidEnsemble("ensemble must be nonempty");
    const Eigen::Index dim = states.front().size();
    double total = 0.0;
    for (const auto& psi : states) {
        if (psi.size() != dim) throw DimensionMismatch("states have mixed dimensions");
        if (!all_finite(psi)) throw InvalidEnsemble("state has non-finite entries");
        double w = psi.squaredNorm();
        if (!(w > 0.0)) throw ZeroWeightState("weight-carrying state has zero norm");
        total += w;
    }
    if (std::abs(total - 1.0) > tol) {
        std::ostringstream msg;
        msg << "total weight is " << total;
        throw PriorsNotNormalized(msg.str());
    }
    const double scale = 1.0 / std::sqrt(total);
    for (auto& psi : states) psi *= scale;
    return PureEnsemble(std::move(states));
}

PureEnsemble PureEnsemble::from_states(const std::vector<ComplexVector>& normalized_states,
                                       const std::vector<double>& priors, double tol) {
    if (normalized_states.size() != priors.size())
        throw InvalidArguments("priors and states must align");
    std::vector<ComplexVector> weighted;
    weighted.reserve(normalized_states.size());
    for (std::size_t i = 0; i < normalized_states.size(); ++i) {
        if (priors[i] < 0.0) throw NegativePrior("negative prior");
        if (!(priors[i] > 0.0)) throw ZeroWeightState("zero prior in pure ensemble");
        double norm2 = normalized_states[i].squaredNorm();
        if (std::abs(norm2 - 1.0) > tol)
            throw InvalidEnsemble("state is not normalized");
        weighted.push_back(std::sqrt(priors[i] / norm2) * normalized_states[i]);
    }
    return from_weighted(std::move(weighted), tol);
}

PureEnsemble PureEnsemble::renormalized(std::vector<ComplexVector> states) {
    if (states.empty()) throw InvalidEnsemble("ensemble must be nonempty");
    double total = 0.0;
    for (const auto& psi : states) total += psi.squaredNorm();
    if (!(total > 0.0) || !std::isfinite(total))
        throw DegenerateUpdate("all states vanished under renormalization");
    const double scale = 1.0 / std::sqrt(total);
    for (auto& psi : states) {
        psi *= scale;
        if (!(psi.squaredNorm() > 0.0))
            throw ZeroWeightState("state vanished under renormalization");
    }
    return PureEnsemble(std::move(states));
}

std::vector<double> PureEnsemble::weights() const {
    std::vector<double> w(size());
    for (std::size_t i = 0; i < size(); ++i) w[i] = weight(i);
    return w;
}

ComplexVector PureEnsemble::normalized_state(std::size_t i) const {
    return states_[i] / states_[i].norm();
}

Ensemble PureEnsemble::to_ensemble(double tol) const {
    std::vector<std::pair<double, DensityMatrix>> items;
    items.reserve(size());
    for (std::size_t i = 0; i < size(); ++i)
        items.emplace_back(weight(i), DensityMatrix::pure(states_[i]));
    return validate_ensemble(std::move(items), tol);
}

DensityMatrix PureEnsemble::average() const {
    ComplexMatrix avg = ComplexMatrix::Zero(dim(), dim());
    for (const auto& psi : states_) avg += psi * psi.adjoint();
    return DensityMatrix(std::move(avg));
}

}  // namespace infopower
