#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "infopower/matrix.hpp"

namespace infopower {

/// Positive semidefinite unit-trace operator. Validated on construction:
/// Hermitian within tol, eigenvalues ≥ −tol, trace within tol of 1.
class DensityMatrix {
  public:
    explicit DensityMatrix(ComplexMatrix matrix, double tol = kDefaultTol);

    /// |ψ⟩⟨ψ| / ‖ψ‖² for a nonzero vector ψ.
    static DensityMatrix pure(const ComplexVector& state);

    static DensityMatrix maximally_mixed(Eigen::Index dim);

    const ComplexMatrix& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }

  private:
    ComplexMatrix matrix_;
};

/// Weighted list of density matrices with priors summing to one.
/// Built through validate_ensemble.
class Ensemble {
  public:
    std::size_t size() const { return states_.size(); }
    Eigen::Index dim() const { return states_.front().dim(); }
    const std::vector<double>& priors() const { return priors_; }
    const std::vector<DensityMatrix>& states() const { return states_; }
    double prior(std::size_t i) const { return priors_[i]; }
    const DensityMatrix& state(std::size_t i) const { return states_[i]; }

    /// Σ_i p_i ρ_i.
    DensityMatrix average() const;

  private:
    friend Ensemble validate_ensemble(std::vector<std::pair<double, DensityMatrix>> items,
                                      double tol);
    Ensemble(std::vector<double> priors, std::vector<DensityMatrix> states)
        : priors_(std::move(priors)), states_(std::move(states)) {}

    std::vector<double> priors_;
    std::vector<DensityMatrix> states_;
};

/// Checks dimensions, nonnegative priors and normalization; priors are
/// renormalized exactly when their sum deviates from 1 by at most tol.
Ensemble validate_ensemble(std::vector<std::pair<double, DensityMatrix>> items,
                           double tol = kDefaultTol);

/// Ensemble of pure states in the weight-carrying convention: the states are
/// unnormalized and each squared norm is the prior probability, with
/// Σ_i ‖ψ_i‖² = 1 exactly after construction.
class PureEnsemble {
  public:
    /// Validates 0 < ‖ψ_i‖² and |Σ‖ψ_i‖² − 1| ≤ tol, then rescales the total
    /// weight to exactly one.
    static PureEnsemble from_weighted(std::vector<ComplexVector> states,
                                      double tol = kDefaultTol);

    /// Builds weight-carrying states √p_i |ψ_i⟩ from unit-norm states and a
    /// prior distribution. Priors must be positive.
    static PureEnsemble from_states(const std::vector<ComplexVector>& normalized_states,
                                    const std::vector<double>& priors,
                                    double tol = kDefaultTol);

    /// Global renormalization Σ‖ψ_i‖² → 1 of arbitrary nonzero states.
    static PureEnsemble renormalized(std::vector<ComplexVector> states);

    std::size_t size() const { return states_.size(); }
    Eigen::Index dim() const { return states_.front().size(); }
    const std::vector<ComplexVector>& states() const { return states_; }
    const ComplexVector& state(std::size_t i) const { return states_[i]; }

    /// ‖ψ_i‖², the prior probability of state i.
    double weight(std::size_t i) const { return states_[i].squaredNorm(); }
    std::vector<double> weights() const;

    ComplexVector normalized_state(std::size_t i) const;

    /// Exact conversion to the density-matrix representation.
    Ensemble to_ensemble(double tol = kDefaultTol) const;

    DensityMatrix average() const;

  private:
    explicit PureEnsemble(std::vector<ComplexVector> states) : states_(std::move(states)) {}

    std::vector<ComplexVector> states_;
};

}  // namespace infopower
