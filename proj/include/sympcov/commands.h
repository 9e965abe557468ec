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

#ifndef SYMPCOV_COMMANDS_H
#define SYMPCOV_COMMANDS_H

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sympcov/symplectic.h"

namespace sympcov::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Default symplectic tolerance, overridden by the SYMPCOV_TOL environment variable.
inline constexpr const char* kToleranceEnv = "SYMPCOV_TOL";

struct CommandResult {
    int exit_code = kExitOk;
    /// JSON report for stdout; empty on usage errors.
    std::string report;
    /// Human-readable messages for stderr.
    std::string diagnostics;
};

struct CheckOptions {
    std::string file;
    double tol = kDefaultTolerance;
};

struct CovarianceOptions {
    std::string file;
    std::string units = "quadrature";
    std::string ordering_out = "grouped";
    double tol = kDefaultTolerance;
};

struct AnalyzeOptions {
    std::string file;
    double tol = kDefaultTolerance;
};

struct EvolveOptions {
    std::string file;
    std::optional<std::string> hamiltonian_file;
    std::optional<double> harmonic_time;
    double tol = kDefaultTolerance;
};

inline constexpr double kDefaultAgreement = 1e-6;

struct VerifyOptions {
    std::string file;
    /// a_1..a_n followed by b_1..b_n; all zero when empty.
    std::vector<double> weyl;
    std::optional<std::size_t> grid_points;
    std::optional<double> grid_extent;
    bool allow_slow = false;
    double tol = kDefaultTolerance;
    double agreement = kDefaultAgreement;
};

CommandResult run_check(const CheckOptions& opts);
CommandResult run_covariance(const CovarianceOptions& opts);
CommandResult run_analyze(const AnalyzeOptions& opts);
CommandResult run_evolve(const EvolveOptions& opts);
CommandResult run_verify(const VerifyOptions& opts);

/// Full command-line entry point: `sympcov check|covariance|analyze|evolve|verify <file> [flags]`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sympcov::cli

#endif  // SYMPCOV_COMMANDS_H
