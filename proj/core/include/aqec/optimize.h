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

#ifndef AQEC_OPTIMIZE_H
#define AQEC_OPTIMIZE_H

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "aqec/channel.h"
#include "aqec/codes.h"
#include "aqec/linalg.h"

namespace aqec {

/// What an encoding is scored by; lower is better.
struct Objective {
    enum class Kind {
        kNegativityAt,    // -N(rho(t_star)) of the transformed probe
        kDeviationSlope,  // initial slope of delta_c on the reduced probe state
    };

    Kind kind = Kind::kNegativityAt;
    double t_star = 0.5;
    double h = 1e-3;

    static Objective negativity_at(double t_star) {
        return Objective{Kind::kNegativityAt, t_star, 1e-3};
    }
    static Objective deviation_slope(double h = 1e-3) {
        return Objective{Kind::kDeviationSlope, 0.0, h};
    }
};

/// Evaluates an Objective for many generators against one fixed channel.
/// Generators are expressed in the dephasing frame: on a bitflip channel the
/// unitary applied to the code is H^n exp(iG) H^n, so a search over G sees the
/// same landscape for both error kinds.
class ObjectiveEvaluator {
   public:
    ObjectiveEvaluator(const RateProfile& rates, Code base, Objective objective);

    double operator()(const CMatrix& generator) const;

    /// The code scored for `generator`.
    Code encode(const CMatrix& generator) const;
    double score_code(const Code& code) const;

   private:
    Code base_;
    Objective objective_;
    KrausSet kraus_;
    KrausSet kraus_zero_;
    CMatrix frame_;  // empty for dephasing
};

/// Objective value of the code exp(i generator) applied to `base` (see
/// ObjectiveEvaluator for the bitflip frame).
double objective(const CMatrix& generator, const RateProfile& rates, const Code& base, const Objective& kind);

/// Real coordinates of a d x d Hermitian matrix: the d diagonal entries, then
/// (re, im) of each strictly upper entry in row-major order.
CMatrix generator_from_params(std::span<const double> params, int dim);
std::vector<double> params_from_generator(const CMatrix& generator);

/// Generator G with exp(iG) = Hadamard on qubit 0 (identity elsewhere).
CMatrix hadamard_generator(int n);

struct NelderMeadOptions {
    double initial_step = 0.5;
    double tolerance = 1e-6;  // on the simplex diameter
    int max_evaluations = 5000;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    std::vector<double> history;  // best value after each iteration
    int evaluations = 0;
    bool converged = false;
};

/// Derivative-free simplex minimisation with dimension-adaptive coefficients.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0,
                             const NelderMeadOptions& options = {});

struct OptimizationResult {
    CMatrix best_generator;
    double best_objective = 0.0;
    std::vector<double> objective_history;
    int evaluations = 0;
    std::uint64_t seed = 0;
    int best_start = 0;  // 0 identity, 1 Hadamard on qubit 0, 2+ random
};

/// Minimises the objective over encoding unitaries exp(iG) applied to `base`.
/// Runs `restarts` seeded random starts in addition to the identity and the
/// qubit-0 Hadamard starts, then keeps the best (ties: lowest start index).
OptimizationResult optimize_code(const RateProfile& rates, const Code& base, const Objective& kind, int restarts,
                                 std::uint64_t seed, const NelderMeadOptions& options = {});

}  // namespace aqec

#endif
