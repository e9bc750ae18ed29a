#pragma once

#include <cstdint>

#include "infopower/matrix.hpp"
#include "infopower/povm.hpp"
#include "infopower/states.hpp"

namespace infopower {

/// Derives an independent substream seed from (seed, index); used so that
/// optimizer restarts and sweep points own disjoint RNG streams.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index);

/// M rotation-invariant unit-norm states (i.i.d. complex Gaussian amplitudes,
/// normalized) with uniform priors 1/M. Bit-for-bit reproducible for a fixed
/// seed: the Gaussian sampler is a fixed Box-Muller over mt19937_64.
PureEnsemble random_pure_ensemble(Eigen::Index dim, std::size_t count, std::uint64_t seed);

/// Haar-distributed unitary (QR of a complex Gaussian matrix with phase fix).
ComplexMatrix random_unitary(Eigen::Index dim, std::uint64_t seed);

/// Full-rank random density matrix GG†/Tr[GG†] with G complex Gaussian.
DensityMatrix random_density_matrix(Eigen::Index dim, std::uint64_t seed);

/// Random POVM: N Wishart-like PSD operators A_j conjugated by the inverse
/// square root of their sum, so completeness holds by construction.
Povm random_povm(Eigen::Index dim, std::size_t outcomes, std::uint64_t seed);

}  // namespace infopower
