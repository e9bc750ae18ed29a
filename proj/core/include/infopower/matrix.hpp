#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace infopower {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Default absolute tolerance for all validation checks (entrywise deviations
/// and eigenvalue floors).
inline constexpr double kDefaultTol = 1e-9;

/// Largest entrywise magnitude, max_{kl} |M_kl|.
inline double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// ‖M − M†‖_max.
inline double hermiticity_deviation(const ComplexMatrix& m) {
    return max_abs(m - m.adjoint());
}

inline bool all_finite(const ComplexMatrix& m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) return false;
    return true;
}

inline bool all_finite(const ComplexVector& v) {
    for (Eigen::Index r = 0; r < v.size(); ++r)
        if (!std::isfinite(v(r).real()) || !std::isfinite(v(r).imag())) return false;
    return true;
}

/// Eigenvalues of a Hermitian matrix, ascending.
inline RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

/// Eigenvalues (ascending) and matching orthonormal eigenvectors (columns)
/// of a Hermitian matrix.
inline std::pair<RealVector, ComplexMatrix> hermitian_eigensystem(const ComplexMatrix& m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    return {solver.eigenvalues(), solver.eigenvectors()};
}

inline double min_eigenvalue(const ComplexMatrix& hermitian) {
    return hermitian_eigenvalues(hermitian).minCoeff();
}

/// Square root of a PSD Hermitian matrix. Eigenvalues below zero (roundoff)
/// are clipped to zero before taking the root.
inline ComplexMatrix sqrt_psd(const ComplexMatrix& m) {
    auto [values, vectors] = hermitian_eigensystem(m);
    RealVector roots(values.size());
    for (Eigen::Index k = 0; k < values.size(); ++k)
        roots(k) = values(k) > 0.0 ? std::sqrt(values(k)) : 0.0;
    return vectors * roots.asDiagonal() * vectors.adjoint();
}

/// Kronecker product with a-index-major block layout.
inline ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

inline ComplexMatrix identity(Eigen::Index dim) {
    return ComplexMatrix::Identity(dim, dim);
}

}  // namespace infopower
