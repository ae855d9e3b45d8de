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

// Command-line front end. Every flag may also be given as `key=value` in the
// file passed to --config; flags on the command line win.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aqec/channel.h"
#include "aqec/errors.h"
#include "aqec/experiments.h"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitNumericalError = 3;

struct Sink {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) {
                throw aqec::ConfigError("out: cannot open '" + path + "' for writing");
            }
            stream = &file;
        }
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Correlated-noise error-correction experiments"};
    app.set_version_flag("--version", std::string("aqec ") + AQEC_VERSION);
    app.set_config("--config", "", "Flat key=value file; command-line flags override it");
    app.require_subcommand(1);
    app.fallthrough();

    aqec::ExperimentConfig cfg;
    std::string kind = "dephasing";
    std::string generator_out;

    app.add_option("--n", cfg.n, "Number of physical qubits (inferred from --gamma when omitted)");
    app.add_option("--gamma", cfg.gamma, "Lindblad rates gamma_1..gamma_n, comma separated")->delimiter(',');
    app.add_option("--kind", kind, "dephasing | bitflip")->check(CLI::IsMember({"dephasing", "bitflip"}));
    app.add_option("--code", cfg.codes, "Code presets: repetition, rotated, rotated[k], anti4, random(seed)")
        ->delimiter(';');
    app.add_option("--tmax", cfg.t_max, "End of the time grid");
    app.add_option("--steps", cfg.t_steps, "Number of time-grid points including t=0");
    app.add_option("--samples", cfg.samples, "Scatter sample count");
    app.add_option("--seed", cfg.seed, "Base RNG seed");
    app.add_option("--out", cfg.out, "Output CSV path (stdout when omitted)");
    app.add_option("--fd-step", cfg.h, "Forward-difference step for initial rates");
    app.add_flag("--identity-transforms", cfg.identity_transforms, "Scatter: skip the random unitaries");
    app.add_option("--objective", cfg.objective, "Optimize: negativity | delta_slope");
    app.add_option("--tstar", cfg.t_star, "Optimize: time at which negativity is scored");
    app.add_option("--restarts", cfg.restarts, "Optimize: random restarts");
    app.add_option("--max-evals", cfg.max_evaluations, "Optimize: evaluations per start");
    app.add_option("--generator-out", generator_out, "Optimize: write the best generator as CSV");
    app.add_option("--axis-x", cfg.axis_x, "Regime map: first rate index (1-based)");
    app.add_option("--axis-y", cfg.axis_y, "Regime map: second rate index (1-based)");
    app.add_option("--grid-min", cfg.grid_min, "Regime map: smallest rate on the grid");
    app.add_option("--grid-max", cfg.grid_max, "Regime map: largest rate on the grid");
    app.add_option("--grid-steps", cfg.grid_steps, "Regime map: points per axis");
    app.add_option("--times", cfg.times, "Regime map: evaluation times, comma separated")->delimiter(',');
    app.add_option("--q-steps", cfg.q_steps, "Recovery check: points per q axis");
    app.add_flag("--verify", cfg.verify, "Cross-check against the master-equation integrator (exit 3 on mismatch)");
    app.add_option("--dt", cfg.dt, "Integrator step for --verify");

    auto* probabilities = app.add_subcommand("probabilities", "Error probabilities p_k(t) and the Kraus index map");
    auto* decay = app.add_subcommand("decay", "Negativity and delta_c versus time for each code");
    auto* scatter = app.add_subcommand("scatter", "Initial delta_c rate vs negativity decay over Haar codes");
    auto* regime = app.add_subcommand("regime-map", "Regime inequality over a grid of two rates");
    auto* optimize = app.add_subcommand("optimize", "Search encoding unitaries; replay the decay curve");
    auto* recovery = app.add_subcommand("recovery-check", "KL verdicts for the correctable set over a (q2,q3) grid");
    auto* tables = app.add_subcommand("tables", "Grouped probabilities on the reference time grids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        cfg.kind = aqec::parse_error_kind(kind);
        const aqec::ExperimentConfig resolved = cfg.resolved();
        Sink sink(resolved.out);
        std::ostream& out = *sink.stream;

        if (probabilities->parsed()) {
            aqec::write_csv(out, aqec::run_probabilities(cfg), resolved, "probabilities");
        } else if (decay->parsed()) {
            aqec::write_csv(out, aqec::run_decay(cfg), resolved, "decay");
        } else if (scatter->parsed()) {
            aqec::write_csv(out, aqec::run_scatter(cfg), resolved, "scatter");
        } else if (regime->parsed()) {
            aqec::write_csv(out, aqec::run_regime_map(cfg), resolved, "regime-map");
        } else if (optimize->parsed()) {
            aqec::OptimizeRun run = aqec::run_optimize(cfg);
            aqec::write_csv(out, run.curve, resolved, "optimize");
            if (!generator_out.empty()) {
                std::ofstream g(generator_out);
                if (!g) {
                    throw aqec::ConfigError("generator-out: cannot open '" + generator_out + "'");
                }
                const auto& m = run.result.best_generator;
                g << "row,col,re,im\n";
                for (Eigen::Index i = 0; i < m.rows(); ++i) {
                    for (Eigen::Index j = 0; j < m.cols(); ++j) {
                        g << i << ',' << j << ',' << aqec::format_number(m(i, j).real()) << ','
                          << aqec::format_number(m(i, j).imag()) << '\n';
                    }
                }
            }
        } else if (recovery->parsed()) {
            aqec::write_csv(out, aqec::run_recovery_check(cfg), resolved, "recovery-check");
        } else if (tables->parsed()) {
            aqec::write_csv(out, aqec::run_tables(cfg), resolved, "tables");
        }
    } catch (const aqec::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const aqec::NumericalError& e) {
        std::cerr << "numerical consistency failure: " << e.what() << '\n';
        return kExitNumericalError;
    }
    return 0;
}
