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

#include "qmatch/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "json.hpp"
#include "qmatch/classifier.hpp"
#include "qmatch/learning.hpp"
#include "qmatch/universal.hpp"

namespace qmatch {

namespace {

using nlohmann::json;

template <class T> json optional_json(const std::optional<T> &v) {
    return v ? json(*v) : json(nullptr);
}

json basis_json(const Basis &basis) {
    json dims = json::array();
    if (basis.kind() == Basis::Kind::occupation) {
        dims.push_back(basis.dimension());
    } else {
        for (const auto &f : basis.factors()) {
            QMATCH_REQUIRE(f.kind() == Basis::Kind::occupation,
                           "nested composite bases are not serializable");
            dims.push_back(f.dimension());
        }
    }
    return {{"label", basis.describe()}, {"dimensions", dims}};
}

Basis basis_from_json(const json &j) {
    const auto dims = j.at("dimensions").get<std::vector<std::size_t>>();
    QMATCH_REQUIRE(!dims.empty(), "basis needs at least one dimension");
    if (dims.size() == 1) {
        return Basis::occupation(dims.front());
    }
    std::vector<Basis> factors;
    for (auto d : dims) {
        factors.push_back(Basis::occupation(d));
    }
    return Basis::composite(std::move(factors));
}

json matrix_json(const Matrix &m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json &rows, std::size_t dimension) {
    const auto d = static_cast<Eigen::Index>(dimension);
    QMATCH_REQUIRE(rows.is_array() && rows.size() == dimension, "matrix row count mismatch");
    Matrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const json &row = rows[static_cast<std::size_t>(i)];
        QMATCH_REQUIRE(row.is_array() && row.size() == dimension, "matrix column count mismatch");
        for (Eigen::Index j = 0; j < d; ++j) {
            const json &z = row[static_cast<std::size_t>(j)];
            QMATCH_REQUIRE(z.is_array() && z.size() == 2, "complex entry must be [re, im]");
            m(i, j) = Complex(z[0].get<double>(), z[1].get<double>());
        }
    }
    return m;
}

void append_optional(std::string &line, const std::optional<double> &v) {
    line += ',';
    if (v) {
        line += format_double(*v);
    }
}

} // namespace

std::string format_double(double value) {
    std::array<char, 64> buffer{};
    const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    if (ec != std::errc{}) {
        throw NumericError("cannot format double");
    }
    return {buffer.data(), end};
}

TableRow report_row(const ScoreReport &report) {
    const SimulationConfig &c = report.config;
    return {c.n_inputs,        c.k_copies,
            c.strategy.name(), report.analytic,
            report.quadrature, report.monte_carlo_mean,
            report.monte_carlo_stderr, c.seed};
}

std::vector<TableRow> curve_rows(const std::vector<CurveRow> &curve) {
    std::vector<TableRow> rows;
    for (const auto &r : curve) {
        if (r.semiclassical) {
            rows.push_back({r.n_inputs, r.k_copies, "semiclassical", r.semiclassical, {}, {}, {}, {}});
        }
        if (r.universal) {
            rows.push_back({r.n_inputs, r.k_copies,
                            r.universal_is_numeric ? "universal_numeric" : "universal",
                            r.universal, {}, {}, {}, {}});
        }
        rows.push_back({r.n_inputs, r.k_copies, std::string(kBaselineLabel), r.baseline_k_infinity,
                        {}, {}, {}, {}});
    }
    return rows;
}

std::string to_csv(const std::vector<TableRow> &rows) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto &r : rows) {
        std::string line = std::to_string(r.n_inputs) + ',' + std::to_string(r.k_copies) + ',' +
                           r.strategy;
        append_optional(line, r.analytic);
        append_optional(line, r.quadrature);
        append_optional(line, r.monte_carlo_mean);
        append_optional(line, r.monte_carlo_stderr);
        line += ',';
        if (r.seed) {
            line += std::to_string(*r.seed);
        }
        out += line;
        out += '\n';
    }
    return out;
}

std::string to_json(const std::vector<TableRow> &rows) {
    json list = json::array();
    for (const auto &r : rows) {
        list.push_back({{"N", r.n_inputs},
                        {"K", r.k_copies},
                        {"strategy", r.strategy},
                        {"score_analytic", optional_json(r.analytic)},
                        {"score_quadrature", optional_json(r.quadrature)},
                        {"score_mc", optional_json(r.monte_carlo_mean)},
                        {"score_mc_stderr", optional_json(r.monte_carlo_stderr)},
                        {"seed", optional_json(r.seed)}});
    }
    return json{{"kind", "score_table"}, {"rows", list}}.dump(2) + "\n";
}

std::string to_json(std::string_view suite, const std::vector<CheckResult> &checks) {
    json list = json::array();
    bool all = true;
    for (const auto &c : checks) {
        all = all && c.passed;
        list.push_back({{"name", c.name},
                        {"passed", c.passed},
                        {"residual", c.residual},
                        {"tolerance", c.tolerance},
                        {"expect_violation", c.expect_violation}});
    }
    return json{{"kind", "verify_report"}, {"suite", suite}, {"passed", all}, {"checks", list}}
               .dump(2) +
           "\n";
}

PomDump make_pom_dump(std::string_view which, int n_inputs, int k_copies, double theta,
                      std::string_view learning_kind, std::size_t grid_points) {
    if (which == "classifier") {
        const ClassifierSpec spec(n_inputs, theta);
        return {"classifier", classifier_pom(spec), n_inputs, std::nullopt, spec.theta, {}};
    }
    if (which == "learning") {
        QMATCH_REQUIRE(n_inputs >= 1, "learning POM needs n_inputs >= 1");
        QMATCH_REQUIRE(k_copies == 1, "learning POMs are constructed for K = 1 only");
        const LearningKind kind = parse_learning_kind(learning_kind);
        LearningStrategy s = make_learning_strategy(kind, grid_points);
        std::map<std::string, std::string> meta{{"learning_kind", std::string(to_string(kind))}};
        meta["triplet_completion"] = kind == LearningKind::separable_four
                                         ? "none: product measurement"
                                         : "|T><T| added to element 0";
        return {"learning", std::move(s.pom), n_inputs, 1, std::nullopt, std::move(meta)};
    }
    if (which == "universal") {
        const MatchingProblem problem{n_inputs, k_copies};
        problem.validate();
        if (k_copies == 1) {
            return {"universal", universal_pom_k1(n_inputs), n_inputs, 1, std::nullopt,
                    {{"solver", "closed_form"}, {"kernel_assignment", "Pi_1"}}};
        }
        return {"universal", universal_solver_numeric(problem).pom, n_inputs, k_copies,
                std::nullopt, {{"solver", "numeric"}, {"kernel_assignment", "Pi_1"}}};
    }
    throw InvalidArgument("unknown POM '" + std::string(which) + "'");
}

std::string pom_to_json(const PomDump &dump) {
    json elements = json::array();
    for (const auto &e : dump.pom.elements()) {
        elements.push_back({{"label", e.label},
                            {"guess", optional_json(e.guess)},
                            {"matrix", matrix_json(e.op.matrix())}});
    }
    json metadata = json::object();
    for (const auto &[k, v] : dump.metadata) {
        metadata[k] = v;
    }
    json j{{"kind", "pom"},
           {"which", dump.which},
           {"basis", basis_json(dump.pom.basis())},
           {"dimension", dump.pom.basis().dimension()},
           {"parameters",
            {{"N", dump.n_inputs}, {"K", optional_json(dump.k_copies)}, {"theta", optional_json(dump.theta)}}},
           {"metadata", metadata},
           {"elements", elements}};
    return j.dump(2) + "\n";
}

PomDump pom_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw InvalidArgument(std::string("malformed POM JSON: ") + e.what());
    }
    try {
        QMATCH_REQUIRE(j.at("kind") == "pom", "JSON document is not a POM dump");
        const Basis basis = basis_from_json(j.at("basis"));
        const auto dimension = j.at("dimension").get<std::size_t>();
        QMATCH_REQUIRE(dimension == basis.dimension(), "POM dimension does not match its basis");

        std::vector<PomElement> elements;
        for (const auto &e : j.at("elements")) {
            std::optional<double> guess;
            if (!e.at("guess").is_null()) {
                guess = e.at("guess").get<double>();
            }
            elements.push_back({e.at("label").get<std::string>(), guess,
                                HermitianOperator(basis, matrix_from_json(e.at("matrix"), dimension))});
        }
        QMATCH_REQUIRE(!elements.empty(), "POM dump has no elements");

        const json &p = j.at("parameters");
        PomDump dump{j.at("which").get<std::string>(), POM(std::move(elements)),
                     p.at("N").get<int>(), std::nullopt, std::nullopt, {}};
        if (!p.at("K").is_null()) {
            dump.k_copies = p.at("K").get<int>();
        }
        if (!p.at("theta").is_null()) {
            dump.theta = p.at("theta").get<double>();
        }
        for (const auto &[k, v] : j.at("metadata").items()) {
            dump.metadata[k] = v.get<std::string>();
        }
        return dump;
    } catch (const json::exception &e) {
        throw InvalidArgument(std::string("malformed POM JSON: ") + e.what());
    }
}

void write_atomic(const std::filesystem::path &path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw std::runtime_error("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cannot rename temporary file onto " + path.string());
    }
}

} // namespace qmatch
