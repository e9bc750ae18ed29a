#pragma once

#include <vector>

#include "infopower/povm.hpp"
#include "infopower/states.hpp"

namespace infopower {

/// Discrete probability distribution: nonnegative entries summing to one
/// within tol (renormalized exactly on construction).
class ProbabilityVector {
  public:
    explicit ProbabilityVector(std::vector<double> entries, double tol = kDefaultTol);

    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<double>& entries() const { return entries_; }

  private:
    std::vector<double> entries_;
};

/// Joint probabilities at or below this threshold contribute exactly zero to
/// every entropy-like sum (continuity limit of x log x).
inline constexpr double kZeroProbability = 1e-15;

/// H(p) = −Σ p_i log₂ p_i with 0·log 0 := 0.
double shannon_entropy(const ProbabilityVector& p);

/// S(ρ) = −Σ λ_k log₂ λ_k over the spectrum; eigenvalues in [−tol, 0) are
/// clipped to zero and zero eigenvalues are skipped.
double von_neumann_entropy(const DensityMatrix& rho);

/// I(R,Π) = Σ_{ij} p_i Tr[ρ_i Π_j] log₂( Tr[ρ_i Π_j] / Σ_k p_k Tr[ρ_k Π_j] ),
/// in bits; terms with vanishing joint probability contribute zero.
double mutual_information(const Ensemble& ensemble, const Povm& povm);
double mutual_information(const PureEnsemble& ensemble, const Povm& povm);

/// χ(R) = S(ρ_R) − Σ p_i S(ρ_i); upper bound on the extractable information.
double holevo_quantity(const Ensemble& ensemble);

/// Q(ρ) = −Σ_k ( Π_{l≠k} λ_k/(λ_k − λ_l) ) λ_k log₂ λ_k. Near-degenerate
/// eigenvalues are split symmetrically by a small spread before evaluating
/// the product formula; the induced error is below validation tolerances.
double subentropy(const DensityMatrix& rho);

/// Q(ρ_R) − Σ p_i Q(ρ_i); lower bound on the extractable information.
/// May be negative; the raw value is returned.
double subentropy_lower_bound(const Ensemble& ensemble);

struct BoundsReport {
    double holevo_chi;        ///< bits
    double subentropy_bound;  ///< bits
};

BoundsReport information_bounds(const Ensemble& ensemble);

/// Outcome distribution of the quantum-classical channel: entry j is Tr[ρΠ_j].
ProbabilityVector apply_qc_channel(const Povm& povm, const DensityMatrix& rho);

}  // namespace infopower
