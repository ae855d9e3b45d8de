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

#include "aqec/optimize.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "aqec/metrics.h"
#include "gtest/gtest.h"
#include "oracles.h"

using namespace aqec;

namespace {

RateProfile fig2_rates() {
    return RateProfile::make({0.2, 0.2, 1.0});
}

double probe_negativity(const Code& code, const RateProfile& rates, double t) {
    ProbeState probe = probe_state(code);
    return negativity(apply_channel(probe.rho, kraus_set(rates, t), probe.split), probe.split);
}

}  // namespace

TEST(Generator, params_round_trip) {
    Rng rng(3);
    for (int dim : {2, 4, 8}) {
        CMatrix g = oracle::random_hermitian(dim, rng);
        std::vector<double> x = params_from_generator(g);
        EXPECT_EQ(x.size(), static_cast<size_t>(dim * dim));
        EXPECT_LT(max_abs_diff(generator_from_params(x, dim), g), 1e-15);
    }
    std::vector<double> wrong(5, 0.0);
    EXPECT_THROW(generator_from_params(wrong, 2), std::invalid_argument);
}

TEST(Generator, hadamard_generator_exponentiates_to_hadamard) {
    for (int n : {2, 3, 4}) {
        CMatrix u = unitary_from_generator(hadamard_generator(n));
        CMatrix h0 = pauli_string(n, QubitSubset{0}, hadamard());
        EXPECT_LT(max_abs_diff(u, h0), 1e-12) << n;
    }
}

TEST(Objective, identity_generator_scores_base_code) {
    ObjectiveEvaluator eval(fig2_rates(), repetition_code(3), Objective::negativity_at(0.5));
    EXPECT_NEAR(eval(CMatrix::Zero(8, 8)), -0.04076220397836614, 1e-10);
    EXPECT_NEAR(eval(hadamard_generator(3)), -0.20189651799465533, 1e-10);
    EXPECT_NEAR(objective(hadamard_generator(3), fig2_rates(), repetition_code(3), Objective::negativity_at(0.5)),
                -0.20189651799465533, 1e-10);
}

TEST(Objective, invariant_under_global_phase_shift) {
    Rng rng(5);
    ObjectiveEvaluator eval(fig2_rates(), repetition_code(3), Objective::negativity_at(0.3));
    CMatrix g = oracle::random_hermitian(8, rng);
    EXPECT_NEAR(eval(g), eval(g + 1.7 * identity(8)), 1e-10);
}

TEST(Objective, score_code_matches_encode) {
    Rng rng(6);
    ObjectiveEvaluator eval(fig2_rates(), repetition_code(3), Objective::negativity_at(0.3));
    CMatrix g = oracle::random_hermitian(8, rng);
    EXPECT_NEAR(eval(g), eval.score_code(eval.encode(g)), 1e-14);
    EXPECT_NEAR(eval.score_code(rotated_code(3)), -probe_negativity(rotated_code(3), fig2_rates(), 0.3), 1e-12);
}

TEST(Objective, deviation_slope_is_positive_and_ranks_codes) {
    ObjectiveEvaluator eval(fig2_rates(), repetition_code(3), Objective::deviation_slope());
    double standard = eval(CMatrix::Zero(8, 8));
    double rotated = eval(hadamard_generator(3));
    EXPECT_GT(standard, 0.0);
    EXPECT_GT(rotated, 0.0);
    EXPECT_TRUE(std::isfinite(standard));
}

TEST(Objective, bitflip_frame_agrees_with_dephasing) {
    Rng rng(12);
    CMatrix g = oracle::random_hermitian(8, rng);
    ObjectiveEvaluator deph(fig2_rates(), repetition_code(3), Objective::negativity_at(0.4));
    CMatrix h = hadamard_all(3);
    ObjectiveEvaluator flip(RateProfile::make({0.2, 0.2, 1.0}, ErrorKind::kBitflip),
                            transform_code(repetition_code(3), h), Objective::negativity_at(0.4));
    EXPECT_NEAR(deph(g), flip(g), 1e-10);
}

TEST(NelderMead, minimizes_quadratic) {
    auto f = [](std::span<const double> x) {
        double s = 0.0;
        for (size_t i = 0; i < x.size(); ++i) {
            double d = x[i] - static_cast<double>(i);
            s += (1.0 + i) * d * d;
        }
        return s;
    };
    NelderMeadResult r = nelder_mead(f, std::vector<double>(4, 5.0), {0.5, 1e-9, 20000});
    EXPECT_TRUE(r.converged);
    ASSERT_EQ(r.x.size(), 4u);
    for (size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(r.x[i], static_cast<double>(i), 1e-4);
    }
    EXPECT_LT(r.value, 1e-8);
    for (size_t i = 1; i < r.history.size(); ++i) {
        EXPECT_LE(r.history[i], r.history[i - 1]);
    }
}

TEST(NelderMead, respects_evaluation_budget) {
    auto f = [](std::span<const double> x) { return std::cos(x[0]) + std::sin(3.0 * x[1]); };
    NelderMeadResult r = nelder_mead(f, {0.1, 0.2}, {0.5, 1e-14, 40});
    EXPECT_LE(r.evaluations, 40 + 4);
    EXPECT_FALSE(r.converged);
}

TEST(Optimize, finds_rotated_code_when_it_wins) {
    NelderMeadOptions opts{0.5, 1e-6, 400};
    OptimizationResult r =
        optimize_code(fig2_rates(), repetition_code(3), Objective::negativity_at(0.5), 1, 7, opts);
    EXPECT_LE(r.best_objective, -0.20189651799465533 + 1e-9);
    EXPECT_EQ(r.seed, 7u);
    for (size_t i = 1; i < r.objective_history.size(); ++i) {
        EXPECT_LE(r.objective_history[i], r.objective_history[i - 1]);
    }
    ObjectiveEvaluator eval(fig2_rates(), repetition_code(3), Objective::negativity_at(0.5));
    EXPECT_NEAR(eval(r.best_generator), r.best_objective, 1e-12);
}

TEST(Optimize, deterministic_for_fixed_seed) {
    NelderMeadOptions opts{0.5, 1e-6, 150};
    RateProfile r = RateProfile::make({0.5, 0.1});
    OptimizationResult a = optimize_code(r, repetition_code(2), Objective::negativity_at(0.2), 3, 42, opts);
    OptimizationResult b = optimize_code(r, repetition_code(2), Objective::negativity_at(0.2), 3, 42, opts);
    EXPECT_EQ(a.best_objective, b.best_objective);
    EXPECT_EQ(a.best_start, b.best_start);
    EXPECT_EQ(a.evaluations, b.evaluations);
    EXPECT_EQ(a.best_generator, b.best_generator);
}
