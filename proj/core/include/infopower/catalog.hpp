#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "infopower/povm.hpp"
#include "infopower/states.hpp"

namespace infopower {

/// A named measurement family member, optionally with its exact informational
/// power and the ensembles known to attain it.
struct CatalogEntry {
    std::string name;
    Povm povm;
    std::optional<double> known_power_bits;
    std::vector<PureEnsemble> known_optimal_ensembles;
    std::map<std::string, double> parameters;
};

/// Real Z_N-symmetric POVM {(2/N)|π_j⟩⟨π_j|}, |π_j⟩ = (cos πj/N, sin πj/N).
/// Known power (exact):
///   W = Σ_j [(2/N) sin²(πj/N)] log₂[(2/N) sin²(πj/N)] + log₂ N.
/// Known optimal ensembles: the real Z_N-symmetric one (M=N, uniform priors)
/// and the Y-shaped three-state family for every admissible arm n.
CatalogEntry zn_symmetric_povm(int n);

/// The closed-form power of the Z_N family alone.
double zn_symmetric_power(int n);

/// Arms n with 0 ≤ p₀ ≤ 1, i.e. N ≤ 4n ≤ 3N.
std::vector<int> zn_admissible_y_arms(int n);

/// Y-shaped ensemble for arm n: states at θ = 0, ±πn/N (ψ(θ) = (sin θ, cos θ))
/// with priors p₁ = p₂ = 1/(4 sin²(πn/N)), p₀ = 1 − 2p₁; a vanishing p₀
/// drops the θ = 0 state.
PureEnsemble zn_y_shaped_ensemble(int n, int arm);

/// Maximally informative ensemble for the Z_N POVM with the fewest states:
/// the two standard basis states for even N, a maximal-p₀ Y-shaped ensemble
/// for odd N.
PureEnsemble minimal_optimal_ensemble(int n);

/// Mirror-symmetric three-outcome qubit POVM {n_j |π_j⟩⟨π_j|} with
/// |π₀⟩ = (1,0), |π_{1,2}⟩ = (sin θ, ±cos θ), n₀ = cos 2θ/cos²θ,
/// n₁ = n₂ = 1/(2cos²θ); requires θ ∈ (0, π/4] so that n₀ ≥ 0.
CatalogEntry mirror_y_povm(double theta);

/// The unique qubit SIC POVM (tetrahedron), elements (1/2)|π_j⟩⟨π_j|.
/// Known power log₂(4/3), attained by the antitetrahedron ensemble.
CatalogEntry sic_qubit();

/// Projective measurement affected by isotropic noise:
/// elements η|j⟩⟨j| + (1−η)·1/D.
CatalogEntry noisy_projective_povm(Eigen::Index dim, double eta);

/// Orthonormal-basis projective measurement.
CatalogEntry projective_povm(Eigen::Index dim);

}  // namespace infopower
