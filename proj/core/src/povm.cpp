#include "infopower/povm.hpp"

#include <algorithm>
#include <sstream>

#include "infopower/errors.hpp"

namespace infopower {

double completeness_deviation(const std::vector<ComplexMatrix>& elements) {
    ComplexMatrix sum = ComplexMatrix::Zero(elements.front().rows(), elements.front().cols());
    for (const auto& e : elements) sum += e;
    return max_abs(sum - ComplexMatrix::Identity(sum.rows(), sum.cols()));
}

Povm validate_povm(std::vector<ComplexMatrix> elements, double tol) {
    if (elements.empty()) throw InvalidArguments("POVM must have at least one element");
    const Eigen::Index dim = elements.front().rows();
    for (std::size_t j = 0; j < elements.size(); ++j) {
        const auto& e = elements[j];
        if (e.rows() != e.cols() || e.rows() != dim)
            throw DimensionMismatch("POVM elements must be square matrices of equal dimension");
        if (!all_finite(e)) {
            std::ostringstream msg;
            msg << "element " << j << " has non-finite entries";
            throw InvalidArguments(msg.str());
        }
        if (double dev = hermiticity_deviation(e); dev > tol) {
            std::ostringstream msg;
            msg << "element " << j << " is not Hermitian, deviation " << dev;
            throw NotHermitian(msg.str());
        }
        if (double min_eig = min_eigenvalue(e); min_eig < -tol) {
            std::ostringstream msg;
            msg << "element " << j << " has negative eigenvalue " << min_eig;
            throw NotPositive(msg.str(), j, min_eig);
        }
    }
    if (double dev = completeness_deviation(elements); dev > tol) {
        std::ostringstream msg;
        msg << "elements sum away from identity by " << dev;
        throw NotComplete(msg.str(), dev);
    }
    return Povm(std::move(elements));
}

Povm tensor_povm(const Povm& a, const Povm& b) {
    std::vector<ComplexMatrix> elements;
    elements.reserve(a.size() * b.size());
    for (const auto& ea : a.elements())
        for (const auto& eb : b.elements()) elements.push_back(kronecker(ea, eb));
    return validate_povm(std::move(elements));
}

namespace {

double born_probability(const ComplexMatrix& rho, const ComplexMatrix& element) {
    double p = (rho * element).trace().real();
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace

RealMatrix born_matrix(const Ensemble& ensemble, const Povm& povm) {
    if (ensemble.dim() != povm.dim())
        throw DimensionMismatch("ensemble and POVM dimensions differ");
    RealMatrix table(ensemble.size(), povm.size());
    for (std::size_t i = 0; i < ensemble.size(); ++i)
        for (std::size_t j = 0; j < povm.size(); ++j)
            table(i, j) = born_probability(ensemble.state(i).matrix(), povm.element(j));
    return table;
}

RealMatrix born_matrix(const PureEnsemble& ensemble, const Povm& povm) {
    if (ensemble.dim() != povm.dim())
        throw DimensionMismatch("ensemble and POVM dimensions differ");
    RealMatrix table(ensemble.size(), povm.size());
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        const ComplexVector psi = ensemble.normalized_state(i);
        for (std::size_t j = 0; j < povm.size(); ++j) {
            double p = (psi.adjoint() * povm.element(j) * psi).value().real();
            table(i, j) = std::clamp(p, 0.0, 1.0);
        }
    }
    return table;
}

}  // namespace infopower
