#include "infopower/random.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "infopower/errors.hpp"

namespace infopower {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Deterministic standard-normal sampler: Box-Muller over mt19937_64, so the
/// produced stream does not depend on the standard library's
/// normal_distribution implementation.
class Gaussian {
  public:
    explicit Gaussian(std::uint64_t seed) : engine_(seed) {}

    double operator()() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    std::complex<double> complex_normal() {
        const double re = (*this)();
        const double im = (*this)();
        return {re, im};
    }

  private:
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Gaussian& g) {
    ComplexMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = g.complex_normal();
    return m;
}

}  // namespace

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 1));
}

PureEnsemble random_pure_ensemble(Eigen::Index dim, std::size_t count, std::uint64_t seed) {
    if (dim < 2 || count < 1)
        throw InvalidArguments("random ensemble needs dim >= 2 and count >= 1");
    Gaussian g(seed);
    const double weight = 1.0 / static_cast<double>(count);
    std::vector<ComplexVector> states;
    states.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        ComplexVector psi(dim);
        for (Eigen::Index k = 0; k < dim; ++k) psi(k) = g.complex_normal();
        psi *= std::sqrt(weight) / psi.norm();
        states.push_back(std::move(psi));
    }
    return PureEnsemble::from_weighted(std::move(states));
}

ComplexMatrix random_unitary(Eigen::Index dim, std::uint64_t seed) {
    if (dim < 1) throw InvalidArguments("dimension must be positive");
    Gaussian g(seed);
    const ComplexMatrix m = gaussian_matrix(dim, dim, g);
    Eigen::HouseholderQR<ComplexMatrix> qr(m);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix column phases so the distribution is Haar.
    for (Eigen::Index c = 0; c < dim; ++c) {
        const std::complex<double> d = r(c, c);
        if (std::abs(d) > 0.0) q.col(c) *= d / std::abs(d);
    }
    return q;
}

DensityMatrix random_density_matrix(Eigen::Index dim, std::uint64_t seed) {
    if (dim < 1) throw InvalidArguments("dimension must be positive");
    Gaussian g(seed);
    const ComplexMatrix m = gaussian_matrix(dim, dim, g);
    ComplexMatrix rho = m * m.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(std::move(rho));
}

Povm random_povm(Eigen::Index dim, std::size_t outcomes, std::uint64_t seed) {
    if (dim < 1 || outcomes < 1)
        throw InvalidArguments("random POVM needs dim >= 1 and outcomes >= 1");
    Gaussian g(seed);
    std::vector<ComplexMatrix> parts;
    parts.reserve(outcomes);
    ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
    for (std::size_t j = 0; j < outcomes; ++j) {
        const ComplexMatrix m = gaussian_matrix(dim, dim, g);
        parts.push_back(m * m.adjoint());
        total += parts.back();
    }
    auto [values, vectors] = hermitian_eigensystem(total);
    RealVector inv_roots(values.size());
    for (Eigen::Index k = 0; k < values.size(); ++k) inv_roots(k) = 1.0 / std::sqrt(values(k));
    const ComplexMatrix whitener = vectors * inv_roots.asDiagonal() * vectors.adjoint();
    std::vector<ComplexMatrix> elements;
    elements.reserve(outcomes);
    for (const auto& part : parts) elements.push_back(whitener * part * whitener);
    return validate_povm(std::move(elements));
}

}  // namespace infopower
