#pragma once

#include <cstddef>
#include <vector>

#include "infopower/matrix.hpp"
#include "infopower/states.hpp"

namespace infopower {

/// Positive operator-valued measurement: a list of PSD operators summing to
/// the identity. Built through validate_povm.
class Povm {
  public:
    std::size_t size() const { return elements_.size(); }
    Eigen::Index dim() const { return elements_.front().rows(); }
    const std::vector<ComplexMatrix>& elements() const { return elements_; }
    const ComplexMatrix& element(std::size_t j) const { return elements_[j]; }

  private:
    friend Povm validate_povm(std::vector<ComplexMatrix> elements, double tol);
    explicit Povm(std::vector<ComplexMatrix> elements) : elements_(std::move(elements)) {}

    std::vector<ComplexMatrix> elements_;
};

/// ‖Σ_j Π_j − 1‖_max of a candidate element list.
double completeness_deviation(const std::vector<ComplexMatrix>& elements);

/// Checks each element for Hermiticity and positive semidefiniteness
/// (min eigenvalue ≥ −tol) and the list for completeness (entrywise).
Povm validate_povm(std::vector<ComplexMatrix> elements, double tol = kDefaultTol);

/// Parallel use of two measurements: elements a_j ⊗ b_k with lexicographic
/// outcome order, a-index major. Tests of additivity depend on this ordering.
Povm tensor_povm(const Povm& a, const Povm& b);

/// Conditional probability table p_{j|i} = Tr[ρ_i Π_j], one row per ensemble
/// state, entries clamped to [0, 1].
RealMatrix born_matrix(const Ensemble& ensemble, const Povm& povm);
RealMatrix born_matrix(const PureEnsemble& ensemble, const Povm& povm);

}  // namespace infopower
