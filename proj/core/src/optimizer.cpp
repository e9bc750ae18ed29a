#include "infopower/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <utility>

#include "infopower/errors.hpp"
#include "infopower/random.hpp"

namespace infopower {

namespace {

/// Weight-carrying overlaps a(i,j) = ⟨ψ_i|Π_j|ψ_i⟩ (the joint probabilities).
RealMatrix overlap_table(const PureEnsemble& ensemble, const Povm& povm) {
    RealMatrix a(ensemble.size(), povm.size());
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        const ComplexVector& psi = ensemble.state(i);
        for (std::size_t j = 0; j < povm.size(); ++j)
            a(i, j) = std::max((psi.adjoint() * povm.element(j) * psi).value().real(), 0.0);
    }
    return a;
}

GradientOperators gradient_from_table(const PureEnsemble& ensemble, const Povm& povm,
                                      const RealMatrix& joint) {
    const Eigen::Index dim = ensemble.dim();
    const RealVector outcome = joint.colwise().sum();
    GradientOperators result;
    result.operators.reserve(ensemble.size());
    result.images.reserve(ensemble.size());
    double mi = 0.0;
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        const double weight = ensemble.weight(i);
        if (!(weight > 0.0)) throw ZeroWeightState("state with zero weight in gradient");
        ComplexMatrix op = ComplexMatrix::Zero(dim, dim);
        for (std::size_t j = 0; j < povm.size(); ++j) {
            const double conditional = joint(i, j) / weight;
            if (conditional <= kGradientZeroTol) continue;  // Π_j|ψ_i⟩ vanishes here
            op += std::log2(joint(i, j) / (weight * outcome(j))) * povm.element(j);
        }
        ComplexVector image = op * ensemble.state(i);
        mi += (ensemble.state(i).adjoint() * image).value().real();
        result.operators.push_back(std::move(op));
        result.images.push_back(std::move(image));
    }
    result.mutual_information_bits = mi;
    return result;
}

/// The ascent objective Σ_{ij} a_ij log₂(a_ij / (w_i q_j)) summed over every
/// strictly positive term. Unlike the operator reconstruction, which omits
/// sub-threshold terms, this is continuous where states turn orthogonal to an
/// outcome; the step-acceptance test depends on that continuity.
double objective_from_table(const PureEnsemble& ensemble, const RealMatrix& joint) {
    const RealVector outcome = joint.colwise().sum();
    double bits = 0.0;
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        const double weight = ensemble.weight(i);
        for (Eigen::Index j = 0; j < joint.cols(); ++j) {
            const double a = joint(static_cast<Eigen::Index>(i), j);
            if (a <= 0.0) continue;
            bits += a * std::log2(a / (weight * outcome(j)));
        }
    }
    return bits;
}

double residual_from(const GradientOperators& gradient, const PureEnsemble& ensemble) {
    double worst = 0.0;
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        const ComplexVector& psi = ensemble.state(i);
        const double deviation =
            (gradient.images[i] - gradient.mutual_information_bits * psi).norm() / psi.norm();
        worst = std::max(worst, deviation);
    }
    return worst;
}

double corollary_gap_from(const GradientOperators& gradient) {
    double sum = 0.0;
    for (const auto& image : gradient.images) sum += image.squaredNorm();
    return std::abs(gradient.mutual_information_bits - std::sqrt(sum));
}

PureEnsemble step_from(const PureEnsemble& ensemble, const GradientOperators& gradient,
                       double alpha) {
    std::vector<ComplexVector> updated;
    updated.reserve(ensemble.size());
    double total = 0.0;
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        ComplexVector psi = (1.0 - alpha) * ensemble.state(i) + alpha * gradient.images[i];
        total += psi.squaredNorm();
        updated.push_back(std::move(psi));
    }
    if (!(total > 1e-300) || !std::isfinite(total))
        throw DegenerateUpdate("ascent step annihilated the ensemble; step size far too large");
    return PureEnsemble::renormalized(std::move(updated));
}

}  // namespace

GradientOperators gradient_operators(const PureEnsemble& ensemble, const Povm& povm) {
    if (ensemble.dim() != povm.dim())
        throw DimensionMismatch("ensemble and POVM dimensions differ");
    return gradient_from_table(ensemble, povm, overlap_table(ensemble, povm));
}

double stationarity_residual(const PureEnsemble& ensemble, const Povm& povm) {
    return residual_from(gradient_operators(ensemble, povm), ensemble);
}

double corollary_gap(const PureEnsemble& ensemble, const Povm& povm) {
    return corollary_gap_from(gradient_operators(ensemble, povm));
}

PureEnsemble ascent_step(const PureEnsemble& ensemble, const Povm& povm, double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) throw InvalidArguments("step size must be in (0, 1]");
    return step_from(ensemble, gradient_operators(ensemble, povm), alpha);
}

PureEnsemble ascent_step(const PureEnsemble& ensemble, const GradientOperators& gradient,
                         double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) throw InvalidArguments("step size must be in (0, 1]");
    return step_from(ensemble, gradient, alpha);
}

void OptimizerConfig::validate() const {
    if (!(alpha0 > 0.0) || alpha0 > 1.0)
        throw InvalidArguments("alpha0 must be in (0, 1]");
    if (!(alpha_shrink > 0.0) || alpha_shrink >= 1.0)
        throw InvalidArguments("alpha_shrink must be in (0, 1)");
    if (!(tol_mi > 0.0) || !(tol_stationarity > 0.0))
        throw InvalidArguments("tolerances must be positive");
    if (max_iters < 1) throw InvalidArguments("max_iters must be at least 1");
    if (restarts < 1) throw InvalidArguments("restarts must be at least 1");
    if (ensemble_size_override && *ensemble_size_override < 1)
        throw InvalidArguments("ensemble size override must be positive");
}

namespace {

struct Evaluation {
    PureEnsemble ensemble;
    GradientOperators gradient;
    double objective;
    double residual;
};

Evaluation evaluate(PureEnsemble ensemble, const Povm& povm) {
    const RealMatrix joint = overlap_table(ensemble, povm);
    GradientOperators gradient = gradient_from_table(ensemble, povm, joint);
    const double objective = objective_from_table(ensemble, joint);
    const double residual = residual_from(gradient, ensemble);
    return {std::move(ensemble), std::move(gradient), objective, residual};
}

/// States whose weight fell below prune_tol, removed in place; returns true
/// when anything was pruned.
bool prune_states(std::vector<ComplexVector>& states, double prune_tol) {
    const auto dead = [prune_tol](const ComplexVector& psi) {
        return psi.squaredNorm() < prune_tol;
    };
    const auto survivors = states.size() - static_cast<std::size_t>(std::count_if(
                                               states.begin(), states.end(), dead));
    if (survivors == states.size() || survivors == 0) return false;
    std::erase_if(states, dead);
    return true;
}

struct AscentOutcome {
    double power_bits = 0.0;
    std::vector<ComplexVector> states;
    int iterations = 0;
    std::vector<TraceRow> trace;
    double residual = 0.0;
    double corollary = 0.0;
    bool converged = false;
};

AscentOutcome run_single_ascent(const Povm& povm, const OptimizerConfig& cfg,
                                std::size_t ensemble_size, std::uint64_t stream_seed) {
    Evaluation current = evaluate(random_pure_ensemble(povm.dim(), ensemble_size, stream_seed),
                                  povm);
    double alpha = cfg.alpha0;
    AscentOutcome outcome;
    outcome.trace.push_back({0, current.objective, alpha, current.residual,
                             static_cast<int>(current.ensemble.size())});

    int iteration = 0;
    int smooth_steps = 0;
    int steps_since_best = 0;
    double best_residual = current.residual;
    bool stalled = false;
    while (iteration < cfg.max_iters && current.residual >= cfg.tol_stationarity) {
        ++iteration;
        std::optional<Evaluation> accepted;
        while (!accepted) {
            try {
                Evaluation candidate = evaluate(step_from(current.ensemble, current.gradient,
                                                          alpha),
                                                povm);
                // Steps are accepted up to tol_mi of objective slack; larger
                // decreases mean the step overshot.
                if (candidate.objective >= current.objective - cfg.tol_mi) {
                    accepted = std::move(candidate);
                    break;
                }
            } catch (const DegenerateUpdate&) {
            } catch (const ZeroWeightState&) {
                // A single state annihilated mid-step; shrink like an overshoot.
            }
            alpha *= cfg.alpha_shrink;
            smooth_steps = 0;
            if (alpha < 1e-14) {
                stalled = true;
                break;
            }
        }
        if (stalled) break;

        // Near the stationary set the map can settle into a cycle that keeps
        // the objective constant; that shows up as a stalled residual and is
        // broken by shrinking the step. Re-growing the step is only safe far
        // from stationarity, where it undoes overshoot cascades from the
        // rough early phase.
        if (accepted->residual < 0.99 * best_residual) {
            best_residual = accepted->residual;
            steps_since_best = 0;
        } else if (++steps_since_best >= 30) {
            alpha = std::max(alpha * cfg.alpha_shrink, 1e-13);
            steps_since_best = 0;
            smooth_steps = 0;
        }
        if (++smooth_steps >= 25 && alpha < cfg.alpha0 && accepted->residual > 1e-3) {
            alpha = std::min(2.0 * alpha, cfg.alpha0);
            smooth_steps = 0;
        }

        std::vector<ComplexVector> states = accepted->ensemble.states();
        if (prune_states(states, cfg.prune_tol))
            current = evaluate(PureEnsemble::renormalized(std::move(states)), povm);
        else
            current = std::move(*accepted);
        outcome.trace.push_back({iteration, current.objective, alpha, current.residual,
                                 static_cast<int>(current.ensemble.size())});
    }

    outcome.power_bits = current.objective;
    outcome.states = current.ensemble.states();
    outcome.iterations = iteration;
    outcome.residual = current.residual;
    outcome.corollary = corollary_gap_from(current.gradient);
    outcome.converged = current.residual < cfg.tol_stationarity;
    return outcome;
}

}  // namespace

OptimizationReport maximize_informational_power(const Povm& povm, const OptimizerConfig& config) {
    config.validate();
    const auto dim = static_cast<std::size_t>(povm.dim());
    const std::size_t ensemble_size =
        config.ensemble_size_override.value_or(config.real_hint ? dim * (dim + 1) / 2 : dim * dim);

    std::vector<std::future<AscentOutcome>> futures;
    futures.reserve(config.restarts);
    for (int r = 0; r < config.restarts; ++r) {
        futures.push_back(std::async(std::launch::async, [&, r] {
            return run_single_ascent(povm, config, ensemble_size,
                                     derive_stream(config.seed, static_cast<std::uint64_t>(r)));
        }));
    }
    std::vector<AscentOutcome> outcomes;
    outcomes.reserve(futures.size());
    for (auto& f : futures) outcomes.push_back(f.get());

    int best = 0;
    for (int r = 1; r < static_cast<int>(outcomes.size()); ++r) {
        const double difference = outcomes[r].power_bits - outcomes[best].power_bits;
        if (difference > 1e-9 ||
            (difference > -1e-9 && outcomes[r].residual < outcomes[best].residual))
            best = r;
    }
    AscentOutcome& winner = outcomes[best];
    return {winner.power_bits,
            PureEnsemble::renormalized(std::move(winner.states)),
            winner.iterations,
            std::move(winner.trace),
            best,
            winner.residual,
            winner.corollary,
            winner.converged};
}

PureEnsemble refine_mixed_ensemble(const Ensemble& ensemble) {
    std::vector<ComplexVector> states;
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        const double prior = ensemble.prior(i);
        if (prior <= 0.0) continue;
        auto [values, vectors] = hermitian_eigensystem(ensemble.state(i).matrix());
        for (Eigen::Index k = 0; k < values.size(); ++k) {
            if (values(k) <= 1e-12) continue;
            states.push_back(std::sqrt(prior * values(k)) * vectors.col(k));
        }
    }
    if (states.empty()) throw InvalidEnsemble("ensemble has no spectral weight");
    return PureEnsemble::renormalized(std::move(states));
}

}  // namespace infopower
