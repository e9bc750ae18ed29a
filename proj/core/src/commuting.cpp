#include "infopower/commuting.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "infopower/errors.hpp"

namespace infopower {

namespace {

/// Index ranges [begin, end) of near-equal consecutive values.
std::vector<std::pair<Eigen::Index, Eigen::Index>> cluster_ranges(const RealVector& values,
                                                                  double gap) {
    std::vector<std::pair<Eigen::Index, Eigen::Index>> ranges;
    Eigen::Index begin = 0;
    for (Eigen::Index k = 1; k <= values.size(); ++k) {
        if (k == values.size() || values(k) - values(k - 1) > gap) {
            ranges.emplace_back(begin, k);
            begin = k;
        }
    }
    return ranges;
}

double max_offdiagonal(const ComplexMatrix& m) {
    double worst = 0.0;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            if (r != c) worst = std::max(worst, std::abs(m(r, c)));
    return worst;
}

constexpr double kClusterGap = 1e-7;

}  // namespace

std::optional<CommonEigenbasis> common_eigenbasis(const Povm& povm, double tol) {
    const std::size_t count = povm.size();
    for (std::size_t j = 0; j < count; ++j) {
        for (std::size_t l = j + 1; l < count; ++l) {
            const ComplexMatrix commutator =
                povm.element(j) * povm.element(l) - povm.element(l) * povm.element(j);
            if (max_abs(commutator) > tol) return std::nullopt;
        }
    }

    // Diagonalize a generic combination; the fixed seed keeps the basis
    // deterministic across runs.
    std::mt19937_64 engine(0x5eedULL);
    std::uniform_int_distribution<int> raw(0, 1 << 20);
    const Eigen::Index dim = povm.dim();
    ComplexMatrix combo = ComplexMatrix::Zero(dim, dim);
    for (const auto& element : povm.elements())
        combo += (1.0 + static_cast<double>(raw(engine)) / static_cast<double>(1 << 20)) * element;
    auto [combo_values, basis] = hermitian_eigensystem(combo);

    // Degenerate blocks of the combination are re-diagonalized per element.
    std::vector<std::pair<Eigen::Index, Eigen::Index>> blocks =
        cluster_ranges(combo_values, kClusterGap * std::max(1.0, combo_values.cwiseAbs().maxCoeff()));
    for (const auto& element : povm.elements()) {
        std::vector<std::pair<Eigen::Index, Eigen::Index>> refined;
        for (const auto& [begin, end] : blocks) {
            const Eigen::Index width = end - begin;
            if (width == 1) {
                refined.emplace_back(begin, end);
                continue;
            }
            ComplexMatrix sub = basis.middleCols(begin, width).adjoint() * element *
                                basis.middleCols(begin, width);
            if (max_offdiagonal(sub) > 1e-13) {
                auto [sub_values, sub_vectors] = hermitian_eigensystem(sub);
                basis.middleCols(begin, width) = basis.middleCols(begin, width) * sub_vectors;
                for (const auto& [b, e] : cluster_ranges(sub_values, kClusterGap))
                    refined.emplace_back(begin + b, begin + e);
            } else {
                refined.emplace_back(begin, end);
            }
        }
        blocks = std::move(refined);
    }

    CommonEigenbasis result{basis, RealMatrix(count, dim), 0.0};
    for (std::size_t j = 0; j < count; ++j) {
        const ComplexMatrix diagonalized = basis.adjoint() * povm.element(j) * basis;
        result.max_offdiagonal = std::max(result.max_offdiagonal, max_offdiagonal(diagonalized));
        for (Eigen::Index i = 0; i < dim; ++i)
            result.outcome_table(static_cast<Eigen::Index>(j), i) =
                std::max(diagonalized(i, i).real(), 0.0);
    }
    if (result.max_offdiagonal > std::max(10.0 * tol, 1e-10)) return std::nullopt;
    return result;
}

PriorOptimization optimize_priors(const RealMatrix& table, double tol_bits) {
    const Eigen::Index outcomes = table.rows();
    const Eigen::Index inputs = table.cols();
    if (inputs < 1 || outcomes < 1) throw InvalidTable("empty conditional probability table");
    RealMatrix conditional = table;
    for (Eigen::Index i = 0; i < inputs; ++i) {
        for (Eigen::Index j = 0; j < outcomes; ++j) {
            if (!std::isfinite(conditional(j, i)) || conditional(j, i) < -1e-12)
                throw InvalidTable("conditional probabilities must be nonnegative");
            if (conditional(j, i) < 0.0) conditional(j, i) = 0.0;
        }
        const double column_sum = conditional.col(i).sum();
        if (std::abs(column_sum - 1.0) > kDefaultTol)
            throw InvalidTable("each input's outcome probabilities must sum to one");
        conditional.col(i) /= column_sum;
    }

    RealVector priors = RealVector::Constant(inputs, 1.0 / static_cast<double>(inputs));
    RealVector divergence(inputs);
    const auto evaluate = [&](const RealVector& p) {
        const RealVector outcome = conditional * p;
        for (Eigen::Index i = 0; i < inputs; ++i) {
            double d = 0.0;
            for (Eigen::Index j = 0; j < outcomes; ++j) {
                const double c = conditional(j, i);
                if (c <= kZeroProbability) continue;
                d += c * std::log2(c / outcome(j));
            }
            divergence(i) = d;
        }
        return p.dot(divergence);
    };

    double power = evaluate(priors);
    int iterations = 0;
    constexpr int kMaxIterations = 200000;
    // Capacity is bracketed by [Σ p_i D_i, max_i D_i]; iterate until the
    // bracket closes.
    while (divergence.maxCoeff() - power >= tol_bits && iterations < kMaxIterations) {
        for (Eigen::Index i = 0; i < inputs; ++i) priors(i) *= std::exp2(divergence(i));
        priors /= priors.sum();
        power = evaluate(priors);
        ++iterations;
    }
    std::vector<double> entries(priors.data(), priors.data() + priors.size());
    return {ProbabilityVector(std::move(entries)), power, iterations};
}

CommutingPower commuting_power(const Povm& povm, double tol) {
    const auto basis = common_eigenbasis(povm, tol);
    if (!basis) throw NotCommuting("POVM elements do not commute within tolerance");
    PriorOptimization optimum = optimize_priors(basis->outcome_table);

    std::vector<ComplexVector> states;
    std::vector<double> priors;
    for (Eigen::Index i = 0; i < basis->basis.cols(); ++i) {
        if (optimum.priors[static_cast<std::size_t>(i)] < 1e-12) continue;
        states.push_back(basis->basis.col(i));
        priors.push_back(optimum.priors[static_cast<std::size_t>(i)]);
    }
    return {optimum.power_bits, PureEnsemble::from_states(states, priors, 1e-6),
            optimum.iterations};
}

double noisy_projective_power(Eigen::Index dim, double eta) {
    if (dim < 2) throw InvalidArguments("dimension must be at least 2");
    if (!(eta >= 0.0) || eta > 1.0) throw InvalidArguments("noise parameter must lie in [0, 1]");
    if (eta == 0.0) return 0.0;  // outcome independent of the state
    const double d = static_cast<double>(dim);
    const double hit = eta + (1.0 - eta) / d;
    const double miss = (1.0 - eta) / d;
    auto xlog2x = [](double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); };
    const double conditional_entropy = -xlog2x(hit) - (d - 1.0) * xlog2x(miss);
    return std::log2(d) - conditional_entropy;
}

}  // namespace infopower
