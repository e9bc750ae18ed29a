#pragma once

#include <cstddef>
#include <vector>

#include "infopower/povm.hpp"
#include "infopower/states.hpp"

namespace infopower {

/// Min eigenvalue below which an average state is treated as singular.
inline constexpr double kSingularTol = 1e-10;

/// The measurement {q_i σ_S^{−1/2} σ_i σ_S^{−1/2}} induced by an ensemble S
/// with average σ_S. Throws SingularAverageState when σ_S is not invertible.
/// A positive ridge adds ε·1 to σ_S before inversion for exploratory use; the
/// output then fails exact completeness by O(ε) and is validated loosely.
Povm pretty_good_measurement(const Ensemble& s, double ridge = 0.0, double tol = kDefaultTol);
Povm pretty_good_measurement(const PureEnsemble& s, double ridge = 0.0, double tol = kDefaultTol);

struct DualEnsemble {
    Ensemble ensemble;
    /// Outcomes j with Tr[σΛ_j] ≈ 0, dropped from the ensemble. Round-trip
    /// identities only hold when this list is empty.
    std::vector<std::size_t> dropped_outcomes;
};

/// The ensemble { Tr[σΛ_j], σ^{1/2}Λ_jσ^{1/2}/Tr[σΛ_j] } induced by a
/// measurement Λ and a state σ.
DualEnsemble dual_ensemble(const Povm& lambda, const DensityMatrix& sigma,
                           double tol = kDefaultTol);

/// |I(S,Λ) − I(R(Λ,σ_S), Π(S))|; zero analytically for every valid pair.
double duality_gap(const Ensemble& s, const Povm& lambda);
double duality_gap(const PureEnsemble& s, const Povm& lambda);

/// An ensemble together with its average state and induced measurement.
struct DualPair {
    Povm povm;                     ///< Π(S)
    DensityMatrix reference_state; ///< σ_S
    Ensemble ensemble;             ///< S
};

DualPair make_dual_pair(const Ensemble& s);

}  // namespace infopower
