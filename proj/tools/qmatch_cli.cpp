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

// qmatch: score curves, POM dumps, invariant suites and protocol simulation.
// Exit codes: 0 success, 1 numeric or check failure, 2 usage error.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "qmatch/classifier.hpp"
#include "qmatch/harness.hpp"
#include "qmatch/io.hpp"
#include "qmatch/learning.hpp"
#include "qmatch/universal.hpp"
#include "qmatch/verify.hpp"

namespace {

using namespace qmatch;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void emit(const std::string &out_path, const std::string &content) {
    if (out_path.empty()) {
        std::cout << content << std::flush;
    } else {
        write_atomic(out_path, content);
    }
}

struct CurveArgs {
    int n_min = 1;
    int n_max = 10;
    int k = 1;
    std::string format = "csv";
    std::string out;
};

int run_curve(const CurveArgs &a) {
    const auto rows = curve_rows(score_curve(a.n_min, a.n_max, a.k));
    emit(a.out, a.format == "csv" ? to_csv(rows) : to_json(rows));
    return kExitOk;
}

struct VerifyArgs {
    std::string suite = "all";
    std::string format = "text";
};

int run_verify(const VerifyArgs &a) {
    const auto checks = run_suite(parse_verify_suite(a.suite));
    bool all = true;
    double worst = 0.0;
    for (const auto &c : checks) {
        all = all && c.passed;
        if (!c.expect_violation) {
            worst = std::max(worst, c.residual);
        }
    }
    if (a.format == "json") {
        std::cout << to_json(a.suite, checks);
    } else {
        for (const auto &c : checks) {
            std::printf("%s  %-48s residual=%.3e %s %.1e\n", c.passed ? "PASS" : "FAIL",
                        c.name.c_str(), c.residual, c.expect_violation ? ">" : "<=", c.tolerance);
        }
        std::printf("%s: %zu checks, max residual %.3e\n", all ? "PASS" : "FAIL", checks.size(),
                    worst);
    }
    return all ? kExitOk : kExitFailure;
}

struct SimulateArgs {
    int n = 1;
    int k = 1;
    std::string strategy = "universal";
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string out;
    bool no_quadrature = false;
};

int run_simulate(const SimulateArgs &a) {
    SimulationConfig config{a.n, a.k, SimulationStrategy::parse(a.strategy), a.samples, a.seed};
    config.validate();
    SimulationOptions options;
    options.with_quadrature = !a.no_quadrature;
    const std::vector<TableRow> rows{report_row(simulate(config, options))};
    emit(a.out, a.format == "csv" ? to_csv(rows) : to_json(rows));
    return kExitOk;
}

struct PovmArgs {
    std::string which;
    int n = 1;
    int k = 1;
    double theta = 0.0;
    std::string learning = "discrete_three";
    std::size_t grid = 64;
    std::string format = "json";
    std::string out;
};

int run_povm(const PovmArgs &a) {
    emit(a.out, pom_to_json(make_pom_dump(a.which, a.n, a.k, a.theta, a.learning, a.grid)));
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum template matching: scores, POMs and simulations"};
    app.require_subcommand(1);

    CurveArgs curve;
    auto *c = app.add_subcommand("curve", "Score versus N for both strategies and the baseline");
    c->add_option("--n-min", curve.n_min, "Smallest N")->required();
    c->add_option("--n-max", curve.n_max, "Largest N")->required();
    c->add_option("--k", curve.k, "Template copies K")->capture_default_str();
    c->add_option("--format", curve.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    c->add_option("--out", curve.out, "Output file (written atomically)");

    VerifyArgs verify;
    auto *v = app.add_subcommand("verify", "Run invariant suites");
    v->add_option("--suite", verify.suite)
        ->check(CLI::IsMember({"pom", "optimality", "oracle", "all"}))
        ->capture_default_str();
    v->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    SimulateArgs sim;
    auto *s = app.add_subcommand("simulate", "Monte-Carlo run of one protocol");
    s->add_option("--n", sim.n, "Input copies N")->required();
    s->add_option("--k", sim.k, "Template copies K")->capture_default_str();
    s->add_option("--strategy", sim.strategy,
                  "universal | semiclassical[:covariant_sqrt|discrete_three|separable_four]")
        ->capture_default_str();
    s->add_option("--samples", sim.samples)->capture_default_str();
    s->add_option("--seed", sim.seed)->capture_default_str();
    s->add_option("--format", sim.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    s->add_option("--out", sim.out, "Output file (written atomically)");
    s->add_flag("--no-quadrature", sim.no_quadrature, "Skip the quadrature column");

    PovmArgs povm;
    auto *p = app.add_subcommand("povm", "Dump a POM as JSON");
    p->add_option("--which", povm.which)
        ->check(CLI::IsMember({"classifier", "learning", "universal"}))
        ->required();
    p->add_option("--n", povm.n, "Input copies N")->capture_default_str();
    p->add_option("--k", povm.k, "Template copies K")->capture_default_str();
    p->add_option("--theta", povm.theta, "Classifier orientation (radians)")->capture_default_str();
    p->add_option("--learning", povm.learning, "Learning strategy kind")->capture_default_str();
    p->add_option("--grid", povm.grid, "Grid size for covariant_sqrt")->capture_default_str();
    p->add_option("--format", povm.format)->check(CLI::IsMember({"json"}))->capture_default_str();
    p->add_option("--out", povm.out, "Output file (written atomically)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*c) return run_curve(curve);
        if (*v) return run_verify(verify);
        if (*s) return run_simulate(sim);
        if (*p) return run_povm(povm);
    } catch (const InvalidArgument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
