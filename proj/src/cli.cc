// Copyright 2026 The qdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdiscord/cli.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdiscord/analytic.h"
#include "qdiscord/errors.h"
#include "qdiscord/monogamy.h"
#include "qdiscord/parallel.h"
#include "qdiscord/random.h"
#include "qdiscord/state_io.h"
#include "qdiscord/states.h"

namespace qdiscord {

namespace {

using nlohmann::json;

std::vector<std::string> split_fields(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

double parse_double(const std::string &s) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    if (used != s.size()) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    return v;
}

int parse_int(const std::string &s) {
    const double v = parse_double(s);
    if (v != std::floor(v) || std::abs(v) > 1e6) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
    return static_cast<int>(v);
}

std::string format_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

BlochAxis random_axis(Rng &rng) {
    while (true) {
        BlochAxis a{rng.normal(), rng.normal(), rng.normal()};
        const double norm = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
        if (norm > 1e-6) {
            return {a[0] / norm, a[1] / norm, a[2] / norm};
        }
    }
}

ProductMeasurement random_measurement(int n, Rng &rng) {
    ProductMeasurement m;
    for (int k = 0; k < n; ++k) {
        m.per_qubit.emplace_back(random_axis(rng));
    }
    return m;
}

PauliDiagonalParams random_pauli_params(int n, Rng &rng) {
    while (true) {
        PauliDiagonalParams p{n, rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        try {
            p.validate();
            return p;
        } catch (const StateError &) {
        }
    }
}

/// Tracks the worst value of one assertion across trials.
class Tally {
   public:
    Tally(std::string label, bool lower_is_worse) : label_(std::move(label)), lower_is_worse_(lower_is_worse) {
        worst_ = lower_is_worse ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
    }
    void add(double value, bool ok) {
        worst_ = lower_is_worse_ ? std::min(worst_, value) : std::max(worst_, value);
        passed_ = passed_ && ok;
        ++count_;
    }
    SuiteCheck finish() const {
        return {label_, passed_ && count_ > 0, count_ > 0 ? worst_ : 0.0};
    }

   private:
    std::string label_;
    bool lower_is_worse_;
    double worst_;
    bool passed_ = true;
    int count_ = 0;
};

constexpr double kOracleTol = 1e-5;
constexpr double kNonnegTol = 1e-8;
constexpr double kTelescopeTol = 1e-9;

SuiteResult suite_nonnegativity(std::uint64_t seed, int trials, const OptimizerConfig &opt) {
    const std::array<double, 4> qs{0.25, 0.5, 0.75, 1.0};
    struct Row {
        double gqd = 0;
        double one_sided = 0;
    };
    const auto rows = parallel_map(static_cast<std::size_t>(trials), opt.threads, [&](std::size_t i) {
        const int n = i % 3 == 2 ? 3 : 2;
        const auto rho = random_density_matrix(n, mix_seed(seed, i));
        OptimizerConfig local = opt;
        local.threads = 1;
        Row row{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
        const int measured[] = {n - 1};
        for (double q : qs) {
            row.gqd = std::min(row.gqd, q_gqd(rho, QParam(q), local).raw_value);
            row.one_sided = std::min(row.one_sided, q_qd_one_sided(rho, measured, QParam(q), local).raw_value);
        }
        return row;
    });
    Tally gqd("q-GQD >= -1e-8 for q in {0.25, 0.5, 0.75, 1}", true);
    Tally one("one-sided q-QD >= -1e-8 for q in {0.25, 0.5, 0.75, 1}", true);
    for (const auto &r : rows) {
        gqd.add(r.gqd, r.gqd >= -kNonnegTol);
        one.add(r.one_sided, r.one_sided >= -kNonnegTol);
    }
    return {"nonnegativity", seed, trials, {gqd.finish(), one.finish()}, {}};
}

SuiteResult suite_telescoping(std::uint64_t seed, int trials, const OptimizerConfig &) {
    Tally residual("|telescoping residual| <= 1e-9 at n=3, q in {0.5, 1}", false);
    for (int i = 0; i < trials; ++i) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        const auto rho = random_density_matrix(3, mix_seed(seed ^ 0x7e1e5c0eULL, static_cast<std::uint64_t>(i)));
        const auto phi = random_measurement(3, rng);
        for (double q : {0.5, 1.0}) {
            const double r = std::abs(decompose_induced_gqd(rho, phi, QParam(q)).residual);
            residual.add(r, r <= kTelescopeTol);
        }
    }
    return {"telescoping", seed, trials, {residual.finish()}, {}};
}

SuiteResult suite_monogamy(std::uint64_t seed, int trials, const OptimizerConfig &opt) {
    SuiteResult result{"monogamy", seed, trials, {}, {}};
    Tally audit("counterexample audit passes at q in {0.5, 0.9, 1-1e-6}", true);
    for (double q : {0.5, 0.9, 1 - 1e-6}) {
        const auto a = bros_counterexample_audit(QParam(q), opt);
        audit.add(a.all_pass() ? 1 : 0, a.all_pass());
        result.notes.push_back("audit q=" + format_g12(q) + ": D(A|BC)=" + format_g12(a.d_a_bc) +
                               " D(AB)=" + format_g12(a.d_ab) + " D(AC)=" + format_g12(a.d_ac) +
                               " D(ABC)=" + format_g12(a.d_abc));
    }
    result.checks.push_back(audit.finish());

    Tally implication("condition implies inequality on every report", true);
    const auto bros = bros_counterexample();
    std::array<int, 3> order{0, 1, 2};
    do {
        bool ok = true;
        std::string flags;
        try {
            const auto r = monogamy_report(bros, QParam(0.9), opt, order);
            flags = "inequality_holds=" + std::string(r.inequality_holds ? "true" : "false") +
                    " condition_holds=" + std::string(r.condition_holds ? "true" : "false") +
                    " margin=" + format_g12(r.inequality_margin);
        } catch (const std::logic_error &e) {
            ok = false;
            flags = e.what();
        }
        implication.add(ok ? 1 : 0, ok);
        result.notes.push_back("counterexample q=0.9 order=(" + std::to_string(order[0]) + "," +
                               std::to_string(order[1]) + "," + std::to_string(order[2]) + "): " + flags);
    } while (std::next_permutation(order.begin(), order.end()));

    Tally bounded("whole >= sum of nested terms - 1e-6 (random 3-qubit, q=0.5)", true);
    struct Row {
        double margin = 0;
        bool implication_ok = true;
    };
    const auto rows = parallel_map(static_cast<std::size_t>(trials), opt.threads, [&](std::size_t i) {
        OptimizerConfig local = opt;
        local.threads = 1;
        const auto rho = random_density_matrix(3, mix_seed(seed, i));
        Row row;
        try {
            const auto r = monogamy_report(rho, QParam(0.5), local);
            row.margin = r.whole - std::accumulate(r.nested.begin(), r.nested.end(), 0.0);
        } catch (const std::logic_error &) {
            row.implication_ok = false;
        }
        return row;
    });
    for (const auto &row : rows) {
        implication.add(row.implication_ok ? 1 : 0, row.implication_ok);
        if (row.implication_ok) {
            bounded.add(row.margin, row.margin >= -kMonogamyTol);
        }
    }
    result.checks.push_back(implication.finish());
    if (trials > 0) {
        result.checks.push_back(bounded.finish());
    }
    return result;
}

SuiteResult suite_oracle_agreement(std::uint64_t seed, int trials, const OptimizerConfig &opt) {
    const std::array<double, 5> qs{0.3, 0.5, 0.8, 0.99, 1.5};
    const auto deviations = parallel_map(static_cast<std::size_t>(trials), opt.threads, [&](std::size_t i) {
        OptimizerConfig local = opt;
        local.threads = 1;
        Rng rng(mix_seed(seed, i));
        const int n = 2 + static_cast<int>(rng.below(2));
        const double q = qs[rng.below(qs.size())];
        double closed = 0;
        double numeric = 0;
        if (i % 2 == 0) {
            const WernerGhzParams p{n, rng.uniform()};
            closed = werner_ghz_gqd(p, QParam(q)).value;
            numeric = q_gqd(werner_ghz(p), QParam(q), local).raw_value;
        } else {
            const auto p = random_pauli_params(n, rng);
            closed = pauli_diagonal_gqd(p, QParam(q)).value;
            numeric = q_gqd(pauli_diagonal_state(p), QParam(q), local).raw_value;
        }
        return std::abs(closed - numeric);
    });
    Tally agree("|closed form - optimizer| <= 1e-5", false);
    for (double d : deviations) {
        agree.add(d, d <= kOracleTol);
    }
    return {"oracle_agreement", seed, trials, {agree.finish()}, {}};
}

SuiteResult suite_majorization(std::uint64_t seed, int trials, const OptimizerConfig &) {
    const WernerGhzParams werner{3, 0.5};
    const auto rho = werner_ghz(werner);
    const auto dominant = Spectrum(werner_ghz_dominant_spectrum(werner));
    Tally formula("measured spectrum formula matches the channel within 1e-10", false);
    Tally major("measured spectrum majorized by the sigma_z spectrum", true);
    Tally order("H_q(measured) >= H_q(sigma_z measured) - 1e-9 for q in {0.5, 2}", true);
    Tally chain("|c1 prod a + c2 prod b + c3 prod g| <= max|c_i| + 1e-12", false);
    for (int i = 0; i < trials; ++i) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        std::vector<BlochAxis> axes;
        ProductMeasurement phi;
        for (int k = 0; k < werner.n; ++k) {
            axes.push_back(random_axis(rng));
            phi.per_qubit.emplace_back(axes.back());
        }
        auto formula_probs = werner_ghz_measured_spectrum(werner, axes);
        auto channel_probs = outcome_probabilities(phi, rho);
        double gap = 0;
        for (std::size_t j = 0; j < formula_probs.size(); ++j) {
            gap = std::max(gap, std::abs(formula_probs[j] - channel_probs[j]));
        }
        formula.add(gap, gap <= 1e-10);
        const Spectrum measured(formula_probs);
        const bool m = majorizes(measured, dominant);
        major.add(m ? 1 : 0, m);
        for (double q : {0.5, 2.0}) {
            const double margin = tsallis_entropy_probs(measured, QParam(q)) - tsallis_entropy_probs(dominant, QParam(q));
            order.add(margin, margin >= -1e-9);
        }
        const auto p = random_pauli_params(2 + static_cast<int>(rng.below(3)), rng);
        std::vector<BlochAxis> pauli_axes;
        for (int k = 0; k < p.n; ++k) {
            pauli_axes.push_back(random_axis(rng));
        }
        const double excess = std::abs(pauli_measured_correlation(p, pauli_axes)) - p.c();
        chain.add(excess, excess <= 1e-12);
    }
    Tally schur("Schur concavity witness for q in {0.5, 1, 2}", true);
    for (double q : {0.5, 1.0, 2.0}) {
        const bool ok = schur_concavity_witness(QParam(q), std::max(trials, 1), seed);
        schur.add(ok ? 1 : 0, ok);
    }
    return {"majorization",
            seed,
            trials,
            {formula.finish(), major.finish(), order.finish(), chain.finish(), schur.finish()},
            {}};
}

json diagnostics_of(const DiscordReport &r) {
    json angles = json::array();
    for (int k : r.measured_qubits) {
        const auto [theta, phi] = r.optimal_measurement[static_cast<std::size_t>(k)].angles();
        angles.push_back({{"qubit", k}, {"theta", theta}, {"phi", phi}});
    }
    return {
        {"raw_value", r.raw_value},
        {"starts_used", r.starts_used},
        {"converged", r.converged},
        {"objective_evals", r.objective_evals},
        {"nonnegativity_guaranteed", r.nonnegativity_guaranteed},
        {"measured_qubits", r.measured_qubits},
        {"optimal_measurement", angles},
    };
}

json suite_json(const SuiteResult &s) {
    json checks = json::array();
    for (const auto &c : s.checks) {
        checks.push_back({{"label", c.label}, {"passed", c.passed}, {"worst", c.worst}});
    }
    return {{"suite", s.suite},     {"seed", s.seed},   {"trials", s.trials},
            {"passed", s.passed()}, {"checks", checks}, {"notes", s.notes}};
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw FormatError("cannot open '" + path + "' for writing");
    }
    f << text;
    f.flush();
    if (!f) {
        throw FormatError("failed writing '" + path + "'");
    }
}

}  // namespace

DensityMatrix named_state(std::string_view name) {
    const auto colon = name.find(':');
    const std::string kind(name.substr(0, colon));
    if (kind == "file" && colon != std::string_view::npos) {
        return load_state_file(std::string(name.substr(colon + 1)));
    }
    const auto fields = split_fields(name, ':');
    const auto arity_error = [&] {
        return std::invalid_argument("bad target '" + std::string(name) + "'");
    };
    try {
        if (kind == "alpha" && fields.size() == 2) {
            return alpha_state(parse_double(fields[1]));
        }
        if (kind == "werner" && fields.size() == 3) {
            return werner_ghz({parse_int(fields[1]), parse_double(fields[2])});
        }
        if (kind == "pauli" && fields.size() == 5) {
            return pauli_diagonal_state(
                {parse_int(fields[1]), parse_double(fields[2]), parse_double(fields[3]), parse_double(fields[4])});
        }
        if (kind == "mixed" && fields.size() == 2) {
            const int n = parse_int(fields[1]);
            if (n < 1 || n > kMaxDeskQubits) {
                throw ParameterError("mixed state size out of range");
            }
            return DensityMatrix::maximally_mixed(n);
        }
    } catch (const StateError &) {
        throw;
    } catch (const ParameterError &) {
        throw;
    } catch (const std::invalid_argument &) {
        throw arity_error();
    }
    throw arity_error();
}

void SweepSpec::validate() const {
    if (!(q_min > 0) || !(q_max > q_min) || !std::isfinite(q_max)) {
        throw ParameterError("sweep needs 0 < q_min < q_max");
    }
    if (steps < 2) {
        throw ParameterError("sweep needs at least two steps");
    }
    if (targets.empty()) {
        throw ParameterError("sweep needs at least one target");
    }
}

double SweepSpec::q_at(int i) const {
    if (i == steps - 1) {
        return q_max;
    }
    return q_min + (q_max - q_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

std::vector<std::vector<double>> sweep_rows(const SweepSpec &spec, const OptimizerConfig &opt) {
    spec.validate();
    std::vector<DensityMatrix> states;
    for (const auto &t : spec.targets) {
        states.push_back(named_state(t));
    }
    return parallel_map(static_cast<std::size_t>(spec.steps), opt.threads, [&](std::size_t i) {
        OptimizerConfig local = opt;
        local.threads = 1;
        const double q = spec.q_at(static_cast<int>(i));
        std::vector<double> row{q};
        for (const auto &rho : states) {
            row.push_back(q_gqd(rho, QParam(q), local).value);
        }
        if (states.size() == 2) {
            row.push_back(row[1] - row[2]);
        }
        return row;
    });
}

std::string sweep_csv(const SweepSpec &spec, const std::vector<std::vector<double>> &rows) {
    std::string text = "q";
    for (const auto &t : spec.targets) {
        text += "," + t;
    }
    if (spec.targets.size() == 2) {
        text += ",difference";
    }
    text += "\n";
    for (const auto &row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) {
                text += ",";
            }
            text += format_g12(row[j]);
        }
        text += "\n";
    }
    return text;
}

bool SuiteResult::passed() const {
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const SuiteCheck &c) { return c.passed; });
}

SuiteResult run_suite(std::string_view suite, std::uint64_t seed, int trials, const OptimizerConfig &opt) {
    opt.validate();
    if (trials < 0) {
        throw ParameterError("trials must be nonnegative");
    }
    if (suite == "nonnegativity") {
        return suite_nonnegativity(seed, trials, opt);
    }
    if (suite == "telescoping") {
        return suite_telescoping(seed, trials, opt);
    }
    if (suite == "monogamy") {
        return suite_monogamy(seed, trials, opt);
    }
    if (suite == "oracle_agreement") {
        return suite_oracle_agreement(seed, trials, opt);
    }
    if (suite == "majorization") {
        return suite_majorization(seed, trials, opt);
    }
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Tsallis-q entropy and q-discord for multi-qubit states", "qdiscord"};
    app.require_subcommand(1);

    OptimizerConfig opt;
    opt.threads = threads_from_env(1);
    const auto add_optimizer_flags = [&](CLI::App *cmd) {
        cmd->add_option("--starts", opt.starts, "optimizer starts");
        cmd->add_option("--max-evals", opt.max_evals, "objective evaluations per start");
        cmd->add_option("--tol", opt.tol, "simplex objective tolerance");
    };

    std::string state_path;
    double q = 1;
    std::string quantity = "qgqd";
    std::vector<int> measured;
    auto *compute = app.add_subcommand("compute", "evaluate one quantity for a state file");
    compute->add_option("--state", state_path, "JSON state file")->required();
    compute->add_option("--q", q, "Tsallis index")->required();
    compute->add_option("--quantity", quantity, "entropy, mutual_info, qqd or qgqd")
        ->check(CLI::IsMember({"entropy", "mutual_info", "qqd", "qgqd"}));
    compute->add_option("--measured", measured, "measured qubits for qqd (default: last qubit)");
    add_optimizer_flags(compute);
    compute->add_option("--seed", opt.seed, "optimizer seed");

    std::string suite;
    std::uint64_t seed = 7;
    int trials = 50;
    auto *verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>(std::begin(kSuiteNames), std::end(kSuiteNames))));
    verify->add_option("--seed", seed, "suite seed");
    verify->add_option("--trials", trials, "random trials");
    add_optimizer_flags(verify);

    SweepSpec spec;
    std::string out_path;
    std::vector<std::string> targets;
    auto *sweep = app.add_subcommand("sweep", "tabulate q-GQD over a range of q");
    sweep->add_option("--q-min", spec.q_min, "first q");
    sweep->add_option("--q-max", spec.q_max, "last q");
    sweep->add_option("--steps", spec.steps, "number of q values");
    sweep->add_option("--target", targets, "alpha:A, werner:N:MU, pauli:N:C1:C2:C3, mixed:N or file:PATH");
    sweep->add_option("--out", out_path, "CSV path (default: stdout)");
    sweep->add_option("--seed", opt.seed, "optimizer seed");
    add_optimizer_flags(sweep);

    std::vector<std::string> argv_store{"qdiscord"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_store) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitInput;
    }

    try {
        opt.validate();
        if (compute->parsed()) {
            const QParam qp(q);
            const auto rho = load_state_file(state_path);
            json result{{"quantity", quantity}, {"q", q}};
            json diag{{"num_qubits", rho.num_qubits()}};
            if (quantity == "entropy") {
                result["value"] = tsallis_entropy(rho, qp);
            } else if (quantity == "mutual_info") {
                result["value"] = mutual_information_q(rho, qp);
            } else if (quantity == "qqd") {
                if (measured.empty()) {
                    measured.push_back(rho.num_qubits() - 1);
                }
                const auto r = q_qd_one_sided(rho, measured, qp, opt);
                result["value"] = r.value;
                diag.update(diagnostics_of(r));
            } else {
                const auto r = q_gqd(rho, qp, opt);
                result["value"] = r.value;
                diag.update(diagnostics_of(r));
            }
            result["diagnostics"] = diag;
            out << result.dump(2) << "\n";
            return kExitOk;
        }
        if (verify->parsed()) {
            const auto r = run_suite(suite, seed, trials, opt);
            out << "suite " << r.suite << " (seed " << r.seed << ", trials " << r.trials << ")\n";
            for (const auto &c : r.checks) {
                out << (c.passed ? "  [PASS] " : "  [FAIL] ") << c.label << " (worst " << format_g12(c.worst)
                    << ")\n";
            }
            for (const auto &note : r.notes) {
                out << "  note: " << note << "\n";
            }
            out << suite_json(r).dump() << "\n";
            return r.passed() ? kExitOk : kExitSuiteFailed;
        }
        if (!targets.empty()) {
            spec.targets = targets;
        }
        const auto csv = sweep_csv(spec, sweep_rows(spec, opt));
        if (out_path.empty()) {
            out << csv;
        } else {
            write_text_file(out_path, csv);
        }
        return kExitOk;
    } catch (const FormatError &e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const StateError &e) {
        err << "state error: " << e.what() << "\n";
        return kExitState;
    } catch (const ParameterError &e) {
        err << "parameter error: " << e.what() << "\n";
        return kExitParameter;
    } catch (const std::invalid_argument &e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range &e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace qdiscord
