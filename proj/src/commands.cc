// Copyright 2026 The sympcov Authors
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

#include "sympcov/commands.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sympcov/analysis.h"
#include "sympcov/covariance.h"
#include "sympcov/json_writer.h"
#include "sympcov/matrix_io.h"
#include "sympcov/oracle.h"

namespace sympcov::cli {

namespace {

using nlohmann::json;

constexpr double kWilliamsonTolerance = 1e-9;

CommandResult guarded(const std::function<CommandResult()>& body) {
    try {
        return body();
    } catch (const NotSymplecticError& e) {
        return {kExitFailed, "", std::string("error: input is not symplectic: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
    }
}

json report_header(const char* command, const MatrixFile& file) {
    json report;
    report["command"] = command;
    report["input_digest"] = input_digest(file);
    return report;
}

std::string render(const json& report) { return dump_json(report) + "\n"; }

json vector_to_json(const std::vector<double>& v) { return json(v); }

json spectrum_to_json(const WilliamsonSpectrum& s) { return vector_to_json(s.kappas); }

bool spectrum_equals(const WilliamsonSpectrum& s, double expected, double tol) {
    return std::all_of(s.kappas.begin(), s.kappas.end(),
                       [&](double k) { return std::abs(k - expected) <= tol; });
}

SymplecticMatrix load_grouped(const MatrixFile& file, double tol) {
    return to_ordering(SymplecticMatrix::create(file.data, file.ordering, tol), Ordering::kGrouped);
}

}  // namespace

CommandResult run_check(const CheckOptions& opts) {
    return guarded([&] {
        const MatrixFile file = read_matrix_file(opts.file);
        const ValidationResult check = validate_symplectic(file.data, file.ordering, opts.tol);

        json results;
        results["n"] = file.n;
        results["ordering"] = std::string(to_string(file.ordering));
        results["residual"] = check.residual;
        results["determinant"] = file.data.determinant();
        if (file.ordering == Ordering::kGrouped) {
            const GroupedBlockResiduals r = grouped_block_residuals(file.data);
            results["block_conditions"] = {{"identity", r.identity},
                                           {"ab_symmetric", r.ab_symmetric},
                                           {"cd_symmetric", r.cd_symmetric}};
        } else {
            const InterleavedBlockResiduals r = interleaved_block_residuals(file.data);
            json cross = json::array();
            for (const CrossResidual& c : r.cross) cross.push_back({{"i", c.i}, {"k", c.k}, {"residual", c.residual}});
            results["block_conditions"] = {{"diagonal", r.diagonal}, {"cross", cross}};
        }

        json report = report_header("check", file);
        report["results"] = results;
        report["tolerances"] = {{"symplectic", opts.tol}};
        report["pass"] = {{"symplectic", check.is_symplectic}};
        return CommandResult{check.is_symplectic ? kExitOk : kExitFailed, render(report), ""};
    });
}

CommandResult run_covariance(const CovarianceOptions& opts) {
    return guarded([&] {
        const MatrixFile file = read_matrix_file(opts.file);
        const Units units = parse_units(opts.units);
        const Ordering ordering_out = parse_ordering(opts.ordering_out);
        if (units == Units::kPhysical && !file.oscillator) {
            throw InvalidArgumentError("--units physical requires an 'oscillator' block in the input file");
        }
        const SymplecticMatrix m = load_grouped(file, opts.tol);

        CovarianceMatrix v = units == Units::kPhysical ? covariance_physical(m, *file.oscillator)
                                                       : covariance_quadrature(m);
        if (ordering_out == Ordering::kInterleaved) v = covariance_interleaved(v, ModeInterleaver(m.modes()));
        const WilliamsonSpectrum spectrum = symplectic_eigenvalues(v);
        const double vacuum_kappa = units == Units::kPhysical ? 0.5 * file.oscillator->hbar() : 0.5;
        const ValidationResult lambda_q = quadrature_lambda_check(m, opts.tol);
        const bool williamson = spectrum_equals(spectrum, vacuum_kappa, kWilliamsonTolerance);

        json report = report_header("covariance", file);
        report["results"] = {{"units", std::string(to_string(units))},
                             {"ordering", std::string(to_string(ordering_out))},
                             {"covariance", matrix_to_json(v.data())},
                             {"symplectic_eigenvalues", spectrum_to_json(spectrum)},
                             {"expected_symplectic_eigenvalue", vacuum_kappa},
                             {"lambda_q_residual", lambda_q.residual}};
        report["tolerances"] = {{"symplectic", opts.tol}, {"williamson", kWilliamsonTolerance}};
        report["pass"] = {{"lambda_q_symplectic", lambda_q.is_symplectic}, {"williamson", williamson}};
        const bool ok = lambda_q.is_symplectic && williamson;
        return CommandResult{ok ? kExitOk : kExitFailed, render(report), ""};
    });
}

CommandResult run_analyze(const AnalyzeOptions& opts) {
    return guarded([&] {
        const MatrixFile file = read_matrix_file(opts.file);
        const SymplecticMatrix input = SymplecticMatrix::create(file.data, file.ordering, opts.tol);
        const SqueezeReport squeeze = squeeze_report(to_ordering(input, Ordering::kGrouped), opts.tol);
        const SeparabilityReport sep = separability_report(input, opts.tol);

        json couplings = json::array();
        for (const ModeCoupling& c : sep.couplings) couplings.push_back({{"i", c.i}, {"k", c.k}, {"norm", c.norm}});

        json report = report_header("analyze", file);
        report["results"] = {
            {"squeeze",
             {{"coordinates", "grouped"},
              {"row_norms", squeeze.row_norms},
              {"diag_variances", squeeze.diag_variances},
              {"squeezed_indices", squeeze.squeezed_indices},
              {"vacuum_level", squeeze.vacuum_level},
              {"squeezed", squeeze.squeezed()}}},
            {"separability",
             {{"criterion", "off-diagonal mode blocks of the interleaved quadrature covariance vanish"},
              {"couplings", couplings},
              {"separable", sep.separable}}}};
        report["tolerances"] = {{"symplectic", opts.tol}, {"squeeze", opts.tol}, {"separability", opts.tol}};
        report["pass"] = {{"symplectic", true}};
        return CommandResult{kExitOk, render(report), ""};
    });
}

CommandResult run_evolve(const EvolveOptions& opts) {
    return guarded([&] {
        if (opts.hamiltonian_file.has_value() == opts.harmonic_time.has_value()) {
            throw InvalidArgumentError("exactly one of --hamiltonian or --harmonic is required");
        }
        const MatrixFile file = read_matrix_file(opts.file);
        const SymplecticMatrix m = load_grouped(file, opts.tol);

        json report = report_header("evolve", file);
        std::optional<SymplecticMatrix> h;
        if (opts.hamiltonian_file) {
            const MatrixFile hfile = read_matrix_file(*opts.hamiltonian_file);
            if (hfile.n != file.n) {
                throw DimensionError("hamiltonian has " + std::to_string(hfile.n) + " modes, state has " +
                                     std::to_string(file.n));
            }
            h = load_grouped(hfile, opts.tol);
            report["hamiltonian_digest"] = input_digest(hfile);
        } else {
            h = harmonic_flow(file.oscillator_or_unit(), *opts.harmonic_time);
        }

        const Evolution ev = evolve(m, *h);
        const WilliamsonSpectrum before = symplectic_eigenvalues(covariance_quadrature(m));
        const WilliamsonSpectrum after = symplectic_eigenvalues(ev.covariance);
        bool preserved = true;
        for (std::size_t j = 0; j < before.kappas.size(); ++j) {
            preserved = preserved && std::abs(before.kappas[j] - after.kappas[j]) <= kWilliamsonTolerance;
        }

        json results = {{"flow", matrix_to_json(h->data())},
                        {"state", matrix_to_json(ev.state.data())},
                        {"covariance", matrix_to_json(ev.covariance.data())},
                        {"symplectic_eigenvalues", spectrum_to_json(after)},
                        {"ordering", "grouped"}};
        if (opts.harmonic_time) results["harmonic_time"] = *opts.harmonic_time;
        report["results"] = results;
        report["tolerances"] = {{"symplectic", opts.tol}, {"williamson", kWilliamsonTolerance}};
        report["pass"] = {{"state_symplectic", true}, {"williamson_preserved", preserved}};
        return CommandResult{preserved ? kExitOk : kExitFailed, render(report), ""};
    });
}

CommandResult run_verify(const VerifyOptions& opts) {
    return guarded([&] {
        const MatrixFile file = read_matrix_file(opts.file);
        if (file.n > 2) throw DimensionError("verify supports n = 1 (or n = 2 with --allow-slow)");
        if (file.n == 2 && !opts.allow_slow) {
            throw InvalidArgumentError("n = 2 verification is slow; pass --allow-slow to run it");
        }
        const auto n = static_cast<Eigen::Index>(file.n);
        const OscillatorSystem sys = file.oscillator_or_unit();
        const SymplecticMatrix m = load_grouped(file, opts.tol);

        WeylLabel w{Vector::Zero(n), Vector::Zero(n)};
        if (!opts.weyl.empty()) {
            if (opts.weyl.size() != static_cast<std::size_t>(2 * n)) {
                throw DimensionError("--weyl needs " + std::to_string(2 * n) + " comma-separated values");
            }
            for (Eigen::Index j = 0; j < n; ++j) {
                w.a(j) = opts.weyl[static_cast<std::size_t>(j)];
                w.b(j) = opts.weyl[static_cast<std::size_t>(n + j)];
            }
        }

        // Default extent: 16 widths of the wider of the vacuum and the
        // propagated state, plus room for the shift b.
        const CovarianceMatrix v = covariance_physical(m, sys);
        double width = sys.lengths().maxCoeff();
        for (Eigen::Index j = 0; j < n; ++j) width = std::max(width, std::sqrt(v.data()(j, j)));
        const double extent = opts.grid_extent.value_or(16.0 * width + 2.0 * max_abs(w.b));
        const std::size_t points = opts.grid_points.value_or(file.n == 1 ? 2048 : 96);
        const Grid grid = centered_grid(file.n, points, extent);

        const KernelSpec spec(m, sys);
        const double closed = amplitude(m, sys, w);
        const Complex numeric = numeric_amplitude(spec, w, grid);
        const double diff = std::abs(numeric.real() - closed);
        const double imag = std::abs(numeric.imag());
        const bool ok = diff < opts.agreement && imag < opts.agreement;

        json report = report_header("verify", file);
        report["results"] = {{"a", std::vector<double>(w.a.data(), w.a.data() + n)},
                             {"b", std::vector<double>(w.b.data(), w.b.data() + n)},
                             {"grid", {{"points", points}, {"extent", extent}}},
                             {"closed_form", closed},
                             {"numeric_real", numeric.real()},
                             {"numeric_imag", numeric.imag()},
                             {"abs_diff", diff}};
        report["tolerances"] = {{"symplectic", opts.tol}, {"agreement", opts.agreement}};
        report["pass"] = {{"agreement", diff < opts.agreement}, {"imaginary_part", imag < opts.agreement}};
        return CommandResult{ok ? kExitOk : kExitFailed, render(report), ""};
    });
}

namespace {

std::vector<double> parse_list(const std::string& text, const char* flag) {
    std::vector<double> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidArgumentError(std::string(flag) + ": cannot parse '" + item + "' as a number");
        }
    }
    return values;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    double default_tol = kDefaultTolerance;
    if (const char* env = std::getenv(kToleranceEnv); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            default_tol = std::stod(env, &used);
            if (used != std::string(env).size() || !(default_tol >= 0.0)) throw std::invalid_argument(env);
        } catch (const std::exception&) {
            err << "error: " << kToleranceEnv << "='" << env << "' is not a nonnegative number\n";
            return kExitUsage;
        }
    }

    CLI::App app{"Covariance matrices of Gaussian states built from symplectic matrices"};
    app.name("sympcov");
    app.require_subcommand(1);

    CheckOptions check;
    check.tol = default_tol;
    auto* check_cmd = app.add_subcommand("check", "validate the symplectic group condition");
    check_cmd->add_option("file", check.file, "matrix JSON file")->required();
    check_cmd->add_option("--tol", check.tol, "validation tolerance");

    CovarianceOptions cov;
    cov.tol = default_tol;
    auto* cov_cmd = app.add_subcommand("covariance", "build the covariance matrix of C_M|0>");
    cov_cmd->add_option("file", cov.file, "matrix JSON file")->required();
    cov_cmd->add_option("--units", cov.units, "physical or quadrature")
        ->check(CLI::IsMember({"physical", "quadrature"}));
    cov_cmd->add_option("--ordering-out", cov.ordering_out, "grouped or interleaved")
        ->check(CLI::IsMember({"grouped", "interleaved"}));
    cov_cmd->add_option("--tol", cov.tol, "validation tolerance");

    AnalyzeOptions analyze;
    analyze.tol = default_tol;
    auto* analyze_cmd = app.add_subcommand("analyze", "squeezing and separability reports");
    analyze_cmd->add_option("file", analyze.file, "matrix JSON file")->required();
    analyze_cmd->add_option("--tol", analyze.tol, "validation, squeezing and separability tolerance");

    EvolveOptions evo;
    evo.tol = default_tol;
    std::string hamiltonian;
    double harmonic = 0.0;
    auto* evolve_cmd = app.add_subcommand("evolve", "evolve the state by a symplectic flow H");
    evolve_cmd->add_option("file", evo.file, "matrix JSON file")->required();
    auto* h_opt = evolve_cmd->add_option("--hamiltonian", hamiltonian, "matrix JSON file holding H");
    auto* t_opt = evolve_cmd->add_option("--harmonic", harmonic, "use the free oscillator flow at time t");
    h_opt->excludes(t_opt);
    evolve_cmd->add_option("--tol", evo.tol, "validation tolerance");

    VerifyOptions verify;
    verify.tol = default_tol;
    std::string weyl;
    std::string grid;
    auto* verify_cmd = app.add_subcommand("verify", "cross-check the closed-form amplitude by quadrature");
    verify_cmd->add_option("file", verify.file, "matrix JSON file")->required();
    verify_cmd->add_option("--weyl", weyl, "a_1,..,a_n,b_1,..,b_n");
    verify_cmd->add_option("--grid", grid, "points,extent");
    verify_cmd->add_flag("--allow-slow", verify.allow_slow, "permit n = 2");
    verify_cmd->add_option("--tol", verify.tol, "validation tolerance");
    verify_cmd->add_option("--agreement", verify.agreement, "maximum closed-form vs quadrature difference");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    CommandResult result;
    try {
        if (*check_cmd) {
            result = run_check(check);
        } else if (*cov_cmd) {
            result = run_covariance(cov);
        } else if (*analyze_cmd) {
            result = run_analyze(analyze);
        } else if (*evolve_cmd) {
            if (*h_opt) evo.hamiltonian_file = hamiltonian;
            if (*t_opt) evo.harmonic_time = harmonic;
            result = run_evolve(evo);
        } else if (*verify_cmd) {
            if (!weyl.empty()) verify.weyl = parse_list(weyl, "--weyl");
            if (!grid.empty()) {
                const std::vector<double> g = parse_list(grid, "--grid");
                if (g.size() != 2 || !(g[0] >= 2.0) || g[0] != std::floor(g[0])) {
                    throw InvalidArgumentError("--grid expects points,extent with integer points >= 2");
                }
                verify.grid_points = static_cast<std::size_t>(g[0]);
                verify.grid_extent = g[1];
            }
            result = run_verify(verify);
        }
    } catch (const std::exception& e) {
        result = {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
    }
    out << result.report;
    err << result.diagnostics;
    return result.exit_code;
}

}  // namespace sympcov::cli
