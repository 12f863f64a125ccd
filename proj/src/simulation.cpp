// Copyright 2026 The qmatch Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "qmatch/classifier.hpp"
#include "qmatch/harness.hpp"
#include "qmatch/learning.hpp"
#include "qmatch/universal.hpp"

namespace qmatch {

namespace {

/// Quadrature for a report is skipped above this many estimated flops.
constexpr double kQuadratureBudget = 1e9;

constexpr double kProbabilityFloor = -1e-10;
constexpr double kProbabilitySumTolerance = 1e-9;

/// Fixed-size amplitudes sqrt(C(n,k)/2^n) e^{ik·phase}, refilled per sample.
class PhaseAmplitudes {
  public:
    explicit PhaseAmplitudes(int n_copies) : weights_(n_copies + 1), values_(n_copies + 1) {
        for (int k = 0; k <= n_copies; ++k) {
            weights_[k] = std::sqrt(std::ldexp(binomial(n_copies, k), -n_copies));
        }
    }

    const Vector &at(double phase) {
        for (Eigen::Index k = 0; k < values_.size(); ++k) {
            values_(k) = std::polar(weights_[k], static_cast<double>(k) * phase);
        }
        return values_;
    }

  private:
    std::vector<double> weights_;
    Vector values_;
};

void kron_into(const Vector &a, const Vector &b, Vector &out) {
    const Eigen::Index nb = b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * nb, nb) = a(i) * b;
    }
}

double quadratic_form(const Matrix &m, const Vector &v) { return v.dot(m * v).real(); }

void check_probability(double p, const char *what) {
    if (!(p >= kProbabilityFloor)) {
        throw NumericError(std::string("negative ") + what + " probability " + std::to_string(p));
    }
}

void check_sum(double total, const char *what) {
    if (!(std::abs(total - 1.0) <= kProbabilitySumTolerance)) {
        throw NumericError(std::string(what) + " probabilities sum to " + std::to_string(total));
    }
}

double fidelity(double f, double g) { return 0.5 * (1.0 + std::cos(f - g)); }

struct Moments {
    double sum = 0.0;
    double sum_sq = 0.0;
};

/// Runs `samples` draws of make_sampler()(rng) in chunks; see kSamplesPerChunk.
template <class MakeSampler>
Moments run_chunks(std::uint64_t samples, std::uint64_t seed, unsigned workers,
                   const MakeSampler &make_sampler) {
    const std::uint64_t n_chunks = (samples + kSamplesPerChunk - 1) / kSamplesPerChunk;
    std::vector<Moments> partial(n_chunks);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto body = [&] {
        try {
            auto sampler = make_sampler();
            for (std::uint64_t c = next++; c < n_chunks; c = next++) {
                std::mt19937_64 rng(chunk_seed(seed, c));
                const std::uint64_t begin = c * kSamplesPerChunk;
                const std::uint64_t count = std::min(kSamplesPerChunk, samples - begin);
                Moments m;
                for (std::uint64_t s = 0; s < count; ++s) {
                    const double x = sampler(rng);
                    m.sum += x;
                    m.sum_sq += x * x;
                }
                partial[c] = m;
            }
        } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
            next = n_chunks;
        }
    };

    const auto n_threads =
        static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, workers), n_chunks));
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < n_threads; ++t) {
        threads.emplace_back(body);
    }
    body();
    for (auto &t : threads) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    Moments total;
    for (const auto &m : partial) {
        total.sum += m.sum;
        total.sum_sq += m.sum_sq;
    }
    return total;
}

ScoreReport summarize(const SimulationConfig &config, const Moments &m) {
    ScoreReport report;
    report.config = config;
    const auto n = static_cast<double>(config.samples);
    report.monte_carlo_mean = m.sum / n;
    if (config.samples > 1) {
        const double variance = std::max(0.0, (m.sum_sq - m.sum * m.sum / n) / (n - 1.0));
        report.monte_carlo_stderr = std::sqrt(variance / n);
    }
    return report;
}

unsigned resolve_workers(const SimulationOptions &options) {
    return options.workers == 0 ? worker_count() : options.workers;
}

std::optional<double> semiclassical_quadrature(const LearningStrategy &strategy, int n_inputs) {
    const QuadratureSpec spec{minimum_quadrature_points(n_inputs, 1)};
    const auto p = static_cast<double>(spec.points_per_angle);
    const double d = n_inputs + 1.0;
    std::map<double, HermitianOperator> by_guess;
    for (const auto &e : strategy.pom.elements()) {
        by_guess.try_emplace(*e.guess, HermitianOperator::zero(strategy.pom.basis()));
    }
    const double cost = static_cast<double>(by_guess.size()) * p * p * (d * d + 16.0);
    if (cost > kQuadratureBudget) {
        return std::nullopt;
    }
    for (auto &[theta, g] : by_guess) {
        g = quadrature_g_of_theta(n_inputs, 1, theta, spec);
    }
    double score = 0.0;
    for (const auto &e : strategy.pom.elements()) {
        score += trace_product(e.op, by_guess.at(*e.guess));
    }
    return score;
}

std::optional<double> universal_quadrature(const MatchingProblem &problem, const POM &pom) {
    const QuadratureSpec spec{minimum_quadrature_points(problem.n_inputs, problem.k_copies)};
    const auto p = static_cast<double>(spec.points_per_angle);
    const auto d = static_cast<double>(problem.joint_dimension());
    if (p * p * p * d * d > kQuadratureBudget) {
        return std::nullopt;
    }
    const auto [w1, w2] = quadrature_w_pair(problem, spec);
    return 0.5 + trace_product(w1 - w2, pom[0].op);
}

} // namespace

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
    // splitmix64 finalizer over seed + (chunk + 1) * golden gamma.
    std::uint64_t z = seed + (chunk + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

unsigned worker_count() {
    const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("QMATCH_THREADS")) {
        char *end = nullptr;
        const long requested = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && requested > 0) {
            return std::min(hardware, static_cast<unsigned>(requested));
        }
    }
    return hardware;
}

std::string SimulationStrategy::name() const {
    if (family == StrategyFamily::universal) {
        return "universal";
    }
    return "semiclassical:" + std::string(to_string(learning));
}

SimulationStrategy SimulationStrategy::parse(const std::string &text) {
    if (text == "universal") {
        return {StrategyFamily::universal, LearningKind::discrete_three};
    }
    if (text == "semiclassical") {
        return {StrategyFamily::semiclassical, LearningKind::discrete_three};
    }
    const std::string prefix = "semiclassical:";
    if (text.starts_with(prefix)) {
        return {StrategyFamily::semiclassical, parse_learning_kind(text.substr(prefix.size()))};
    }
    throw InvalidArgument("unknown strategy '" + text + "'");
}

void SimulationConfig::validate() const {
    QMATCH_REQUIRE(n_inputs >= 1, "simulation needs n_inputs >= 1");
    QMATCH_REQUIRE(k_copies >= 1, "simulation needs k_copies >= 1");
    QMATCH_REQUIRE(samples >= 1, "simulation needs samples >= 1");
    if (strategy.family == StrategyFamily::semiclassical) {
        QMATCH_REQUIRE(k_copies == 1, "semiclassical simulation supports k_copies = 1 only");
    } else if (k_copies > 1) {
        const MatchingProblem problem{n_inputs, k_copies};
        QMATCH_REQUIRE(problem.joint_dimension() <= kMaxJointDimension,
                       "joint dimension " + std::to_string(problem.joint_dimension()) +
                           " exceeds " + std::to_string(kMaxJointDimension));
    }
}

ScoreReport simulate_semiclassical(const SimulationConfig &config,
                                   const SimulationOptions &options) {
    config.validate();
    QMATCH_REQUIRE(config.strategy.family == StrategyFamily::semiclassical,
                   "simulate_semiclassical needs a semiclassical strategy");
    const int nn = config.n_inputs;
    const LearningStrategy strategy = make_learning_strategy(config.strategy.learning);

    std::vector<Matrix> learning_ops;
    std::vector<double> guesses;
    std::vector<Matrix> omega_one;
    for (const auto &e : strategy.pom.elements()) {
        learning_ops.push_back(e.op.matrix());
        guesses.push_back(*e.guess);
        omega_one.push_back(classifier_pom(ClassifierSpec(nn, *e.guess))[0].op.matrix());
    }

    auto make_sampler = [&] {
        return [&, input = PhaseAmplitudes(nn), first = PhaseAmplitudes(1),
                second = PhaseAmplitudes(1), pair = Vector(4),
                probs = std::vector<double>(learning_ops.size())](std::mt19937_64 &rng) mutable {
            std::uniform_real_distribution<double> angle(0.0, kTwoPi);
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            const double f = angle(rng);
            const double g1 = angle(rng);
            const double g2 = angle(rng);

            kron_into(first.at(g1), second.at(g2), pair);
            double total = 0.0;
            for (std::size_t i = 0; i < learning_ops.size(); ++i) {
                probs[i] = quadratic_form(learning_ops[i], pair);
                check_probability(probs[i], "learning");
                total += probs[i];
            }
            check_sum(total, "learning");

            const double u = unit(rng) * total;
            std::size_t outcome = probs.size() - 1;
            double acc = 0.0;
            for (std::size_t i = 0; i < probs.size(); ++i) {
                acc += probs[i];
                if (u < acc) {
                    outcome = i;
                    break;
                }
            }

            const double q1 = quadratic_form(omega_one[outcome], input.at(f));
            check_probability(q1, "classification");
            check_probability(1.0 - q1, "classification");
            return fidelity(f, unit(rng) < q1 ? g1 : g2);
        };
    };

    ScoreReport report =
        summarize(config, run_chunks(config.samples, config.seed, resolve_workers(options),
                                     make_sampler));
    report.analytic = strategy_score(strategy, nn);
    if (options.with_quadrature) {
        report.quadrature = semiclassical_quadrature(strategy, nn);
    }
    return report;
}

ScoreReport simulate_universal(const SimulationConfig &config, const SimulationOptions &options) {
    config.validate();
    QMATCH_REQUIRE(config.strategy.family == StrategyFamily::universal,
                   "simulate_universal needs the universal strategy");
    const MatchingProblem problem{config.n_inputs, config.k_copies};
    const POM pom = problem.k_copies == 1 ? universal_pom_k1(problem.n_inputs)
                                          : universal_solver_numeric(problem).pom;
    const Matrix &pi1 = pom[0].op.matrix();
    const auto d = static_cast<Eigen::Index>(problem.joint_dimension());
    const auto t = static_cast<Eigen::Index>(problem.k_copies + 1);

    auto make_sampler = [&] {
        return [&, input = PhaseAmplitudes(problem.n_inputs),
                first = PhaseAmplitudes(problem.k_copies),
                second = PhaseAmplitudes(problem.k_copies), pair = Vector(t * t),
                psi = Vector(d)](std::mt19937_64 &rng) mutable {
            std::uniform_real_distribution<double> angle(0.0, kTwoPi);
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            const double f = angle(rng);
            const double g1 = angle(rng);
            const double g2 = angle(rng);

            kron_into(first.at(g1), second.at(g2), pair);
            kron_into(input.at(f), pair, psi);
            const double p1 = quadratic_form(pi1, psi);
            check_probability(p1, "matching");
            check_probability(1.0 - p1, "matching");
            return fidelity(f, unit(rng) < p1 ? g1 : g2);
        };
    };

    ScoreReport report =
        summarize(config, run_chunks(config.samples, config.seed, resolve_workers(options),
                                     make_sampler));
    if (problem.k_copies == 1) {
        report.analytic = universal_score_analytic(problem.n_inputs);
    }
    if (options.with_quadrature) {
        report.quadrature = universal_quadrature(problem, pom);
    }
    return report;
}

ScoreReport simulate(const SimulationConfig &config, const SimulationOptions &options) {
    return config.strategy.family == StrategyFamily::universal
               ? simulate_universal(config, options)
               : simulate_semiclassical(config, options);
}

} // namespace qmatch
