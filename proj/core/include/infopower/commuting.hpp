#pragma once

#include <optional>

#include "infopower/info_measures.hpp"
#include "infopower/povm.hpp"
#include "infopower/states.hpp"

namespace infopower {

/// Simultaneous eigenbasis of a POVM with commuting elements.
struct CommonEigenbasis {
    /// Columns are the common orthonormal eigenvectors |i⟩.
    ComplexMatrix basis;
    /// outcome_table(j, i) = ⟨i|Π_j|i⟩, an N×D column-stochastic table.
    RealMatrix outcome_table;
    /// Largest off-diagonal magnitude left after the joint diagonalization.
    double max_offdiagonal;
};

/// Returns the common eigenbasis when all pairwise commutators satisfy
/// ‖[Π_j,Π_l]‖_max ≤ tol, and nullopt otherwise. The basis comes from
/// diagonalizing a random (seeded, fixed) linear combination of the elements,
/// with degenerate blocks re-diagonalized element by element.
std::optional<CommonEigenbasis> common_eigenbasis(const Povm& povm, double tol = kDefaultTol);

struct PriorOptimization {
    ProbabilityVector priors;
    double power_bits;
    int iterations;
};

/// Maximizes Σ_{ij} p_i p_{j|i} log₂( p_{j|i} / Σ_k p_k p_{j|k} ) over prior
/// distributions p — the capacity of the discrete channel given by the N×D
/// column-stochastic table p_{j|i} — by the standard alternating
/// (Blahut) update, iterated until the capacity bracket closes below tol_bits.
PriorOptimization optimize_priors(const RealMatrix& table, double tol_bits = 1e-12);

struct CommutingPower {
    double power_bits;
    PureEnsemble ensemble;  ///< common eigenvectors carrying the optimal priors
    int iterations;
};

/// Informational power of a commuting POVM: optimal priors over the common
/// eigenvectors. States whose optimized prior falls below 1e−12 are pruned.
/// Throws NotCommuting when no common eigenbasis exists at tolerance tol.
CommutingPower commuting_power(const Povm& povm, double tol = kDefaultTol);

/// Closed form for the projective measurement under isotropic noise,
///   W = log₂ D + (η + (1−η)/D) log₂(η + (1−η)/D) + (D−1)·((1−η)/D) log₂((1−η)/D).
double noisy_projective_power(Eigen::Index dim, double eta);

}  // namespace infopower
