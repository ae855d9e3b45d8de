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

#include "aqec/experiments.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "aqec/errors.h"
#include "aqec/metrics.h"
#include "aqec/parallel.h"
#include "aqec/recovery.h"

#ifndef AQEC_VERSION
#define AQEC_VERSION "0.0.0"
#endif

namespace aqec {

namespace {

constexpr double kOracleTolerance = 1e-6;

std::string join(std::span<const double> values) {
    std::string s;
    for (size_t i = 0; i < values.size(); ++i) {
        s += (i ? "," : "") + format_number(values[i]);
    }
    return s;
}

std::string join(std::span<const std::string> values) {
    std::string s;
    for (size_t i = 0; i < values.size(); ++i) {
        s += (i ? "," : "") + values[i];
    }
    return s;
}

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i) {
        v[i] = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return v;
}

Objective parse_objective(const ExperimentConfig& c) {
    if (c.objective == "negativity") {
        return Objective::negativity_at(c.t_star);
    }
    if (c.objective == "delta_slope") {
        return Objective::deviation_slope(c.h);
    }
    throw ConfigError("objective: expected 'negativity' or 'delta_slope', got '" + c.objective + "'");
}

void check_against_integrator(const RateProfile& rates, const ProbeState& probe, std::span<const double> times,
                              std::span<const CMatrix> kraus_states, double dt, const std::string& label) {
    const LindbladGenerator gen = lindblad_generator(rates, probe.split.dim_a);
    const std::vector<CMatrix> ode = integrate_lindblad_trajectory(gen, probe.rho, times, dt);
    for (size_t i = 0; i < times.size(); ++i) {
        double diff = max_abs_diff(ode[i], kraus_states[i]);
        if (diff > kOracleTolerance) {
            throw NumericalError("verify: Kraus and master-equation states differ by " + format_number(diff) +
                                 " for " + label + " at t = " + format_number(times[i]));
        }
    }
}

}  // namespace

ExperimentConfig ExperimentConfig::resolved() const {
    ExperimentConfig c = *this;
    if (c.gamma.empty()) {
        if (c.n == 0 || c.n == 3) {
            c.gamma = {0.2, 0.2, 1.0};
        } else if (c.n == 4) {
            c.gamma = {0.2, 0.3, 0.1, 2.0};
        } else {
            throw ConfigError("gamma: no default rates for n = " + std::to_string(c.n) + "; pass --gamma");
        }
    }
    const int rate_count = static_cast<int>(c.gamma.size());
    if (c.n == 0) {
        c.n = rate_count;
    }
    if (c.n != rate_count) {
        throw ConfigError("n: " + std::to_string(c.n) + " does not match the " + std::to_string(rate_count) +
                          " rates given in gamma");
    }
    (void)RateProfile::make(c.gamma, c.kind);
    if (c.t_max == 0.0) {
        c.t_max = c.n == 3 ? 3.0 : 0.5;
    }
    if (c.t_steps == 0) {
        c.t_steps = c.n == 3 ? 301 : 101;
    }
    if (!(c.t_max > 0.0) || !std::isfinite(c.t_max)) {
        throw ConfigError("tmax: must be > 0");
    }
    if (c.t_steps < 2) {
        throw ConfigError("steps: must be >= 2");
    }
    if (c.samples < 1) {
        throw ConfigError("samples: must be >= 1");
    }
    if (c.codes.empty()) {
        c.codes = default_codes(c.n);
    }
    for (const auto& name : c.codes) {
        (void)code_from_preset(name, c.n);
    }
    if (!(c.h > 0.0)) {
        throw ConfigError("fd-step: must be > 0");
    }
    if (!(c.dt > 0.0)) {
        throw ConfigError("dt: must be > 0");
    }
    if (!(c.t_star >= 0.0)) {
        throw ConfigError("tstar: must be >= 0");
    }
    if (c.restarts < 1) {
        throw ConfigError("restarts: must be >= 1");
    }
    if (c.max_evaluations < 1) {
        throw ConfigError("max-evals: must be >= 1");
    }
    (void)parse_objective(c);
    if (c.axis_x < 1 || c.axis_x > c.n || c.axis_y < 1 || c.axis_y > c.n || c.axis_x == c.axis_y) {
        throw ConfigError("axes: need two distinct rate indices in [1, n]");
    }
    if (c.grid_steps < 1 || !(c.grid_min >= 0.0) || !(c.grid_max >= c.grid_min)) {
        throw ConfigError("grid: need steps >= 1 and 0 <= grid-min <= grid-max");
    }
    if (c.times.empty()) {
        c.times = {0.1};
    }
    for (double t : c.times) {
        if (!(t >= 0.0)) {
            throw ConfigError("times: entries must be >= 0");
        }
    }
    if (c.q_steps < 2) {
        throw ConfigError("q-steps: must be >= 2");
    }
    return c;
}

RateProfile ExperimentConfig::rates() const {
    return RateProfile::make(gamma, kind);
}

std::vector<double> ExperimentConfig::time_grid() const {
    return linspace(0.0, t_max, t_steps);
}

std::vector<double> Table::column(std::string_view name) const {
    auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) {
        throw std::out_of_range("Table: no column '" + std::string(name) + "'");
    }
    const size_t idx = static_cast<size_t>(it - columns.begin());
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        out.push_back(r.at(idx));
    }
    return out;
}

std::string format_number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) {
        return "nan";
    }
    return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const Table& table, const ExperimentConfig& c, std::string_view command) {
    out << "# aqec " << AQEC_VERSION << '\n';
    out << "# command = " << command << '\n';
    out << "# n = " << c.n << '\n';
    out << "# gamma = " << join(c.gamma) << '\n';
    out << "# kind = " << to_string(c.kind) << '\n';
    out << "# code = " << join(c.codes) << '\n';
    out << "# tmax = " << format_number(c.t_max) << '\n';
    out << "# steps = " << c.t_steps << '\n';
    out << "# samples = " << c.samples << '\n';
    out << "# seed = " << c.seed << '\n';
    for (const auto& note : table.notes) {
        out << "# " << note << '\n';
    }
    for (size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << format_number(row[i]);
        }
        out << '\n';
    }
}

Code to_channel_frame(const Code& code, ErrorKind kind) {
    if (kind == ErrorKind::kDephasing) {
        return code;
    }
    return transform_code(code, hadamard_all(code.n));
}

std::vector<std::string> default_codes(int n) {
    if (n == 4) {
        return {"repetition", "anti4", "rotated"};
    }
    return {"repetition", "rotated"};
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("pearson: need two equal-length samples of size >= 2");
    }
    const double m = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= m;
    my /= m;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) {
        return 0.0;
    }
    return sxy / std::sqrt(sxx * syy);
}

Table run_probabilities(const ExperimentConfig& config) {
    const ExperimentConfig c = config.resolved();
    const RateProfile rates = c.rates();
    const std::vector<double> times = c.time_grid();
    Table table;
    table.columns.push_back("t");
    for (int k = 0; k <= c.n; ++k) {
        table.columns.push_back("p" + std::to_string(k));
    }
    for (int k = 0; k <= c.n; ++k) {
        long long b = binomial(c.n, k);
        table.columns.push_back((b == 1 ? "" : std::to_string(b)) + "p" + std::to_string(k) + "_total");
    }
    table.notes.push_back("kraus index map (qubits carrying the error; qubit 0 is the leftmost factor):");
    const auto subsets = ordered_subsets(c.n);
    for (size_t i = 0; i < subsets.size(); ++i) {
        std::string s = "  E" + std::to_string(i) + " = {";
        for (size_t q = 0; q < subsets[i].size(); ++q) {
            s += (q ? "," : "") + std::to_string(subsets[i][q]);
        }
        table.notes.push_back(s + "}");
    }
    table.rows.resize(times.size());
    parallel_for(times.size(), [&](size_t i) {
        ErrorProbabilities p = error_probabilities(rates, times[i]);
        if (c.verify && c.n == 3) {
            ErrorProbabilities closed = closed_form_probabilities3(rates, times[i]);
            for (int k = 0; k <= 3; ++k) {
                if (std::abs(closed.p[k] - p.p[k]) > 1e-10) {
                    throw NumericalError("verify: closed-form p" + std::to_string(k) + " disagrees at t = " +
                                         format_number(times[i]));
                }
            }
        }
        std::vector<double> row{times[i]};
        for (int k = 0; k <= c.n; ++k) {
            row.push_back(p.p[k]);
        }
        for (int k = 0; k <= c.n; ++k) {
            row.push_back(p.grouped(k));
        }
        table.rows[i] = std::move(row);
    });
    if (c.verify) {
        const ProbeState probe = probe_state(to_channel_frame(repetition_code(c.n), c.kind));
        std::vector<CMatrix> states(times.size());
        parallel_for(times.size(), [&](size_t i) {
            states[i] = apply_channel(probe.rho, kraus_set(rates, times[i]), probe.split);
        });
        check_against_integrator(rates, probe, times, states, c.dt, "repetition");
    }
    return table;
}

Table run_decay(const ExperimentConfig& config) {
    const ExperimentConfig c = config.resolved();
    const RateProfile rates = c.rates();
    const std::vector<double> times = c.time_grid();
    std::vector<Code> codes;
    Table table;
    table.columns.push_back("t");
    for (const auto& name : c.codes) {
        codes.push_back(to_channel_frame(code_from_preset(name, c.n), c.kind));
        table.columns.push_back("neg_" + name);
        table.columns.push_back("delta_p_" + name);
        table.columns.push_back("delta_red_" + name);
    }
    std::vector<ProbeState> probes;
    std::vector<CMatrix> reduced;
    for (const auto& code : codes) {
        probes.push_back(probe_state(code));
        reduced.push_back(partial_trace(probes.back().rho, probes.back().split, Subsystem::kA));
    }
    // states[code][time]
    std::vector<std::vector<CMatrix>> states(codes.size(), std::vector<CMatrix>(times.size()));
    table.rows.resize(times.size());
    parallel_for(times.size(), [&](size_t i) {
        const KrausSet kraus = kraus_set(rates, times[i]);
        std::vector<double> row{times[i]};
        for (size_t k = 0; k < codes.size(); ++k) {
            states[k][i] = apply_channel(probes[k].rho, kraus, probes[k].split);
            row.push_back(negativity(states[k][i], probes[k].split));
            row.push_back(deviation(codes[k].projector(), kraus).delta_c);
            row.push_back(deviation(reduced[k], kraus).delta_c);
        }
        table.rows[i] = std::move(row);
    });
    if (c.verify) {
        for (size_t k = 0; k < codes.size(); ++k) {
            check_against_integrator(rates, probes[k], times, states[k], c.dt, c.codes[k]);
        }
    }
    return table;
}

Table run_scatter(const ExperimentConfig& config) {
    const ExperimentConfig c = config.resolved();
    if (c.samples < 2) {
        throw ConfigError("samples: scatter needs at least 2 samples");
    }
    const RateProfile rates = c.rates();
    const KrausSet kraus0 = kraus_set(rates, 0.0);
    const KrausSet kraus_h = kraus_set(rates, c.h);
    const KrausSet kraus_half = kraus_set(rates, c.h / 2);
    const Code base = repetition_code(c.n);
    const int dim = base.dim();

    auto at = [&](double t) -> const KrausSet& {
        if (t == 0.0) {
            return kraus0;
        }
        return t == c.h ? kraus_h : kraus_half;
    };

    Table table;
    table.columns = {"sample", "ddelta_dt", "dneg_dt"};
    table.rows.resize(static_cast<size_t>(c.samples));
    parallel_for(table.rows.size(), [&](size_t i) {
        Code code = base;
        if (!c.identity_transforms) {
            std::seed_seq seq{c.seed, static_cast<std::uint64_t>(i)};
            Rng rng(seq);
            code = transform_code(base, haar_unitary(dim, rng));
        }
        code = to_channel_frame(code, c.kind);
        const ProbeState probe = probe_state(code);
        const CMatrix reduced = partial_trace(probe.rho, probe.split, Subsystem::kA);
        const RateEstimate ddelta =
            initial_rate([&](double t) { return deviation(reduced, at(t)).delta_c; }, c.h);
        const RateEstimate dneg = initial_rate(
            [&](double t) { return negativity(apply_channel(probe.rho, at(t), probe.split), probe.split); }, c.h);
        table.rows[i] = {static_cast<double>(i), ddelta.forward, dneg.forward};
    });
    std::vector<double> x = table.column("ddelta_dt");
    std::vector<double> y = table.column("dneg_dt");
    for (auto& v : y) {
        v = -v;
    }
    table.notes.push_back("pearson_r(ddelta_dt, -dneg_dt) = " + format_number(pearson(x, y)));
    return table;
}

Table run_tables(const ExperimentConfig& config) {
    const ExperimentConfig c = config.resolved();
    const RateProfile rates = c.rates();
    std::vector<double> times;
    if (config.t_max == 0.0 && config.t_steps == 0 && (c.n == 3 || c.n == 4)) {
        times = c.n == 3 ? std::vector<double>{0.0, 0.1, 0.2, 0.4, 0.6}
                         : std::vector<double>{0.0, 0.05, 0.1, 0.2, 0.3, 0.4};
    } else {
        times = c.time_grid();
    }
    Table table;
    table.columns.push_back("t");
    std::vector<std::string> labels;
    for (int k = 0; k <= c.n; ++k) {
        long long b = binomial(c.n, k);
        labels.push_back((b == 1 ? "" : std::to_string(b)) + "p" + std::to_string(k));
    }
    for (const auto& l : labels) {
        table.columns.push_back(l);
    }
    for (const auto& l : labels) {
        table.columns.push_back(l + "_2dp");
    }
    table.columns.push_back("total");
    for (double t : times) {
        ErrorProbabilities p = error_probabilities(rates, t);
        std::vector<double> row{t};
        for (int k = 0; k <= c.n; ++k) {
            row.push_back(p.grouped(k));
        }
        for (int k = 0; k <= c.n; ++k) {
            row.push_back(std::round(p.grouped(k) * 100.0) / 100.0);
        }
        row.push_back(p.total());
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table run_regime_map(const ExperimentConfig& config) {
    const ExperimentConfig c = config.resolved();
    const std::vector<double> axis = linspace(c.grid_min, c.grid_max, c.grid_steps);
    Table table;
    table.columns = {"t",   "gamma_" + std::to_string(c.axis_x), "gamma_" + std::to_string(c.axis_y),
                     "lhs", "rhs",
                     "rotated_optimal"};
    const size_t per_t = axis.size() * axis.size();
    table.rows.resize(c.times.size() * per_t);
    parallel_for(table.rows.size(), [&](size_t idx) {
        const double t = c.times[idx / per_t];
        const double gx = axis[(idx % per_t) / axis.size()];
        const double gy = axis[idx % axis.size()];
        std::vector<double> gamma = c.gamma;
        gamma[c.axis_x - 1] = gx;
        gamma[c.axis_y - 1] = gy;
        const RegimeVerdict v = regime_inequality(error_probabilities(RateProfile::make(gamma, c.kind), t));
        table.rows[idx] = {t, gx, gy, v.lhs, v.rhs, v.rotated_optimal ? 1.0 : 0.0};
    });
    return table;
}

OptimizeRun run_optimize(const ExperimentConfig& config) {
    const ExperimentConfig c = config.resolved();
    const RateProfile rates = c.rates();
    const Code base = to_channel_frame(code_from_preset(c.codes.front(), c.n), c.kind);
    const Objective objective = parse_objective(c);
    NelderMeadOptions options;
    options.max_evaluations = c.max_evaluations;
    OptimizeRun run;
    run.result = optimize_code(rates, base, objective, c.restarts, c.seed, options);

    const Code optimized = ObjectiveEvaluator(rates, base, objective).encode(run.result.best_generator);
    const Code repetition = to_channel_frame(repetition_code(c.n), c.kind);
    const Code rotated = to_channel_frame(rotated_code(c.n), c.kind);
    const std::vector<double> times = c.time_grid();
    Table& curve = run.curve;
    curve.columns = {"t", "neg_optimized", "neg_repetition", "neg_rotated"};
    curve.rows.resize(times.size());
    parallel_for(times.size(), [&](size_t i) {
        const KrausSet kraus = kraus_set(rates, times[i]);
        std::vector<double> row{times[i]};
        for (const Code* code : {&optimized, &repetition, &rotated}) {
            const ProbeState probe = probe_state(*code);
            row.push_back(negativity(apply_channel(probe.rho, kraus, probe.split), probe.split));
        }
        curve.rows[i] = std::move(row);
    });
    curve.notes.push_back("objective = " + c.objective + ", tstar = " + format_number(c.t_star) +
                          ", restarts = " + std::to_string(c.restarts));
    curve.notes.push_back("result,seed,evaluations,best_start,best_objective");
    curve.notes.push_back("result," + std::to_string(run.result.seed) + "," + std::to_string(run.result.evaluations) +
                          "," + std::to_string(run.result.best_start) + "," +
                          format_number(run.result.best_objective));
    return run;
}

Table run_recovery_check(const ExperimentConfig& config) {
    const ExperimentConfig c = config.resolved();
    const std::vector<double> q2s = linspace(0.0, 2.0 / 3.0, c.q_steps);
    const std::vector<double> q3s = linspace(0.0, 1.0, c.q_steps);
    const Code rotated = rotated_code(3);
    const Code standard = repetition_code(3);
    const double nan = std::nan("");
    Table table;
    table.columns = {"q2",         "q3",          "valid", "kl_rotated", "max_violation_rotated",
                     "kl_standard", "max_violation_standard"};
    for (double q2 : q2s) {
        for (double q3 : q3s) {
            RecoveryParams params{q2, q3};
            if (!params.valid()) {
                table.rows.push_back({q2, q3, 0.0, nan, nan, nan, nan});
                continue;
            }
            const auto set = recovery_error_set(params);
            const KlVerdict rot = kl_check(rotated, set);
            const KlVerdict std_v = kl_check(standard, set);
            table.rows.push_back({q2, q3, 1.0, rot.satisfied ? 1.0 : 0.0, rot.max_violation,
                                  std_v.satisfied ? 1.0 : 0.0, std_v.max_violation});
        }
    }
    return table;
}

}  // namespace aqec
