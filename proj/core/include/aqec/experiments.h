// Copyright 2026 The aqec Authors
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

#ifndef AQEC_EXPERIMENTS_H
#define AQEC_EXPERIMENTS_H

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aqec/channel.h"
#include "aqec/codes.h"
#include "aqec/optimize.h"

namespace aqec {

/// Settings shared by every experiment. Zero / empty fields mean "use the
/// default for n" and are filled in by resolved().
///
/// Codes are named in the dephasing frame. Under the bitflip channel every code
/// (presets and random transforms alike) is mapped through Hadamard on all
/// qubits before use, which makes bitflip runs reproduce dephasing runs.
struct ExperimentConfig {
    int n = 0;
    std::vector<double> gamma;
    ErrorKind kind = ErrorKind::kDephasing;
    double t_max = 0.0;
    int t_steps = 0;
    int samples = 1000;
    std::uint64_t seed = 1;
    std::vector<std::string> codes;
    std::string out;

    // scatter
    double h = 1e-3;
    bool identity_transforms = false;

    // optimize
    std::string objective = "negativity";
    double t_star = 0.5;
    int restarts = 8;
    int max_evaluations = 5000;

    // regime-map
    int axis_x = 1;
    int axis_y = 3;
    double grid_min = 0.0;
    double grid_max = 2.0;
    int grid_steps = 11;
    std::vector<double> times;

    // recovery-check
    int q_steps = 5;

    // cross-check Kraus results against the master-equation integrator
    bool verify = false;
    double dt = 1e-3;

    /// Fills defaults and validates; throws ConfigError naming the field.
    ExperimentConfig resolved() const;
    RateProfile rates() const;
    std::vector<double> time_grid() const;
};

/// Numeric CSV payload plus free-form '#' notes written after the config block.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> notes;

    /// Throws std::out_of_range for an unknown column.
    std::vector<double> column(std::string_view name) const;
};

/// Writes '#'-prefixed metadata (tool version, command, resolved config), the
/// table notes, then the CSV header and rows. Numbers use the shortest
/// round-trip representation, so output is byte-stable for a given config.
void write_csv(std::ostream& out, const Table& table, const ExperimentConfig& config, std::string_view command);

/// Shortest round-trip decimal form of v.
std::string format_number(double v);

/// `code` as used on `kind`'s channel.
Code to_channel_frame(const Code& code, ErrorKind kind);

/// Default code presets for n.
std::vector<std::string> default_codes(int n);

double pearson(std::span<const double> x, std::span<const double> y);

/// t, p0..pn, then grouped C(n,k) p_k columns. Notes carry the Kraus index map.
Table run_probabilities(const ExperimentConfig& config);

/// t, then neg_/delta_p_/delta_red_ columns per code.
Table run_decay(const ExperimentConfig& config);

/// sample, ddelta_dt, dneg_dt per Haar-transformed repetition code; the
/// Pearson r between ddelta_dt and -dneg_dt is recorded in the notes.
Table run_scatter(const ExperimentConfig& config);

/// Grouped probabilities at the reference time grid (n = 3, 4) or the
/// configured grid, with full-precision and two-decimal columns.
Table run_tables(const ExperimentConfig& config);

/// t, gamma_<x>, gamma_<y>, lhs, rhs, rotated_optimal over a square rate grid.
Table run_regime_map(const ExperimentConfig& config);

struct OptimizeRun {
    OptimizationResult result;
    Table curve;  // t, neg_optimized, neg_repetition, neg_rotated
};

OptimizeRun run_optimize(const ExperimentConfig& config);

/// q2, q3, valid, kl_rotated, max_violation_rotated, kl_standard,
/// max_violation_standard over a q_steps x q_steps grid of [0,2/3] x [0,1].
Table run_recovery_check(const ExperimentConfig& config);

}  // namespace aqec

#endif
