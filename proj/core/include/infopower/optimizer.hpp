#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "infopower/povm.hpp"
#include "infopower/states.hpp"

namespace infopower {

/// Outcomes with exactly zero probability have their (formally divergent)
/// log term omitted from the gradient operator: positive semidefiniteness
/// forces Π_j|ψ_i⟩ = 0 there, so the omitted term annihilates the state.
/// Strictly positive terms are always kept — the log coefficient grows only
/// logarithmically while ‖Π_j|ψ_i⟩‖ shrinks as √p, and truncating at a
/// positive threshold p* floors the reachable stationarity residual at about
/// |log₂ p*|·√p*.
inline constexpr double kGradientZeroTol = 0.0;

/// The per-state operators
///   Π′_i = Σ_j log₂( ⟨ψ_i|Π_j|ψ_i⟩ / (‖ψ_i‖² Σ_k ⟨ψ_k|Π_j|ψ_k⟩) ) Π_j
/// together with their images Π′_i|ψ_i⟩ and the mutual information
/// reconstructed as Σ_i ⟨ψ_i|Π′_i|ψ_i⟩.
struct GradientOperators {
    std::vector<ComplexMatrix> operators;
    std::vector<ComplexVector> images;
    double mutual_information_bits;
};

GradientOperators gradient_operators(const PureEnsemble& ensemble, const Povm& povm);

/// max_i ‖ Π′_i|ψ_i⟩ − I(V,Π)|ψ_i⟩ ‖ / ‖ψ_i‖. Vanishes exactly on ensembles
/// satisfying the eigenvalue condition of maximally informative ensembles.
double stationarity_residual(const PureEnsemble& ensemble, const Povm& povm);

/// | I(V,Π) − sqrt( Σ_i ⟨ψ_i|Π′_i²|ψ_i⟩ ) |, a convergence diagnostic that is
/// near zero only at stationary ensembles.
double corollary_gap(const PureEnsemble& ensemble, const Povm& povm);

/// One steepest-ascent update |ψ̂_i⟩ = [(1−α)·1 + α·Π′_i]|ψ_i⟩ followed by
/// global renormalization. Throws DegenerateUpdate if every state vanishes.
PureEnsemble ascent_step(const PureEnsemble& ensemble, const Povm& povm, double alpha);
PureEnsemble ascent_step(const PureEnsemble& ensemble, const GradientOperators& gradient,
                         double alpha);

struct OptimizerConfig {
    double alpha0 = 0.2;            ///< initial step size, in (0, 1]
    double alpha_shrink = 0.5;      ///< step multiplier on overshoot, in (0, 1)
    /// Objective slack (bits): a step losing more than this counts as an
    /// overshoot and shrinks the step size. Kept above double-precision noise
    /// so roundoff cannot masquerade as an overshoot.
    double tol_mi = 1e-13;
    double tol_stationarity = 1e-7; ///< stop when the stationarity residual falls below this
    int max_iters = 5000;
    /// Independent seeded ascents; the only protection against local maxima.
    /// The qubit SIC lands in a local basin from roughly 3 of 4 random
    /// 4-state starts, so the default keeps the miss probability negligible.
    int restarts = 24;
    std::uint64_t seed = 0;
    std::optional<std::size_t> ensemble_size_override;
    /// The POVM is real in some basis: start from D(D+1)/2 states instead of D².
    bool real_hint = false;
    /// Weight below which a state is removed from the iteration.
    double prune_tol = 1e-12;

    void validate() const;
};

struct TraceRow {
    int iteration;
    double mi_bits;
    double alpha;
    double residual;
    int active_states;  ///< drops when near-zero-weight states are pruned
};

struct OptimizationReport {
    double power_bits;                  ///< best I(V,Π) found
    PureEnsemble ensemble;              ///< the maximizing ensemble (weight-carrying)
    int iterations_used;
    std::vector<TraceRow> trace;        ///< trace of the winning restart
    int best_restart;
    double stationarity_residual;
    double corollary_gap_bits;
    /// False when the restart hit max_iters (or stalled) with the residual
    /// still above tol_stationarity; the report is returned regardless.
    bool converged;
};

/// Runs cfg.restarts independent steepest ascents from random pure ensembles
/// (restart r uses stream derive_stream(seed, r)) and returns the best by
/// final mutual information, ties broken by lower stationarity residual.
/// The start uses M = ensemble_size_override states when set, else D(D+1)/2
/// when real_hint, else D². The step size halves whenever a step would
/// decrease I and is never re-grown.
OptimizationReport maximize_informational_power(const Povm& povm,
                                                const OptimizerConfig& config = {});

/// Spectral refinement ρ_i = Σ_k |ψ_ik⟩⟨ψ_ik| of a mixed ensemble into a pure
/// weight-carrying one; never decreases the mutual information with any POVM.
PureEnsemble refine_mixed_ensemble(const Ensemble& ensemble);

}  // namespace infopower
