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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>
#include <stdexcept>

#include "aqec/metrics.h"
#include "aqec/parallel.h"

namespace aqec {

ObjectiveEvaluator::ObjectiveEvaluator(const RateProfile& rates, Code base, Objective objective)
    : base_(std::move(base)),
      objective_(objective),
      kraus_(kraus_set(rates, objective.kind == Objective::Kind::kNegativityAt ? objective.t_star : objective.h)),
      kraus_zero_(kraus_set(rates, 0.0)),
      frame_(rates.kind == ErrorKind::kBitflip ? hadamard_all(rates.n) : CMatrix()) {
    if (base_.n != rates.n) {
        throw std::invalid_argument("objective: code and rate profile disagree on n");
    }
}

double ObjectiveEvaluator::score_code(const Code& code) const {
    const ProbeState probe = probe_state(code);
    if (objective_.kind == Objective::Kind::kNegativityAt) {
        return -negativity(apply_channel(probe.rho, kraus_, probe.split), probe.split);
    }
    // Forward difference of delta_c on the reduced probe state.
    const CMatrix reduced = partial_trace(probe.rho, probe.split, Subsystem::kA);
    return (deviation(reduced, kraus_).delta_c - deviation(reduced, kraus_zero_).delta_c) / objective_.h;
}

Code ObjectiveEvaluator::encode(const CMatrix& generator) const {
    if (generator.rows() != base_.dim() || generator.cols() != base_.dim()) {
        throw std::invalid_argument("objective: generator has wrong dimension");
    }
    CMatrix u = unitary_from_generator(generator);
    if (frame_.size() != 0) {
        u = frame_ * u * frame_;
    }
    return transform_code(base_, u);
}

double ObjectiveEvaluator::operator()(const CMatrix& generator) const {
    return score_code(encode(generator));
}

double objective(const CMatrix& generator, const RateProfile& rates, const Code& base, const Objective& kind) {
    return ObjectiveEvaluator(rates, base, kind)(generator);
}

CMatrix generator_from_params(std::span<const double> params, int dim) {
    if (params.size() != static_cast<size_t>(dim) * dim) {
        throw std::invalid_argument("generator_from_params: need dim^2 parameters");
    }
    CMatrix g(dim, dim);
    size_t k = 0;
    for (int i = 0; i < dim; ++i) {
        g(i, i) = params[k++];
    }
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            g(i, j) = Complex(params[k], params[k + 1]);
            g(j, i) = std::conj(g(i, j));
            k += 2;
        }
    }
    return g;
}

std::vector<double> params_from_generator(const CMatrix& generator) {
    const int dim = static_cast<int>(generator.rows());
    std::vector<double> params;
    params.reserve(static_cast<size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i) {
        params.push_back(generator(i, i).real());
    }
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            params.push_back(generator(i, j).real());
            params.push_back(generator(i, j).imag());
        }
    }
    return params;
}

CMatrix hadamard_generator(int n) {
    // H has eigenvalues +-1, so exp(i pi/2 (I - H)) = H.
    std::vector<CMatrix> factors(n, identity(2));
    factors[0] = hadamard();
    const int d = 1 << n;
    return (std::numbers::pi / 2.0) * (identity(d) - kron_all(factors));
}

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0,
                             const NelderMeadOptions& options) {
    const size_t dim = x0.size();
    if (dim == 0) {
        throw std::invalid_argument("nelder_mead: empty parameter vector");
    }
    const double d = static_cast<double>(dim);
    const double reflect = 1.0;
    const double expand = 1.0 + 2.0 / d;
    const double contract = 0.75 - 1.0 / (2.0 * d);
    const double shrink = 1.0 - 1.0 / d;

    NelderMeadResult res;
    auto eval = [&](const std::vector<double>& x) {
        ++res.evaluations;
        return f(x);
    };

    std::vector<std::vector<double>> pts(dim + 1, x0);
    for (size_t i = 0; i < dim; ++i) {
        pts[i + 1][i] += options.initial_step;
    }
    std::vector<double> vals(dim + 1);
    for (size_t i = 0; i <= dim; ++i) {
        vals[i] = eval(pts[i]);
    }

    std::vector<size_t> order(dim + 1);
    std::vector<double> centroid(dim);
    std::vector<double> xr(dim), xe(dim), xc(dim);
    auto along = [&](std::vector<double>& out, double coef, const std::vector<double>& target) {
        for (size_t k = 0; k < dim; ++k) {
            out[k] = centroid[k] + coef * (target[k] - centroid[k]);
        }
    };

    while (true) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return vals[a] < vals[b]; });
        const size_t best = order.front();
        const size_t worst = order.back();
        const size_t second_worst = order[dim - 1];
        res.history.push_back(vals[best]);

        double diameter = 0.0;
        for (size_t i = 0; i <= dim; ++i) {
            for (size_t k = 0; k < dim; ++k) {
                diameter = std::max(diameter, std::abs(pts[i][k] - pts[best][k]));
            }
        }
        if (diameter < options.tolerance) {
            res.converged = true;
            break;
        }
        if (res.evaluations >= options.max_evaluations) {
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (size_t i = 0; i <= dim; ++i) {
            if (i == worst) {
                continue;
            }
            for (size_t k = 0; k < dim; ++k) {
                centroid[k] += pts[i][k] / d;
            }
        }

        along(xr, -reflect, pts[worst]);
        const double fr = eval(xr);
        if (fr < vals[best]) {
            along(xe, -reflect * expand, pts[worst]);
            const double fe = eval(xe);
            if (fe < fr) {
                pts[worst] = xe;
                vals[worst] = fe;
            } else {
                pts[worst] = xr;
                vals[worst] = fr;
            }
            continue;
        }
        if (fr < vals[second_worst]) {
            pts[worst] = xr;
            vals[worst] = fr;
            continue;
        }
        bool accepted = false;
        if (fr < vals[worst]) {
            along(xc, -reflect * contract, pts[worst]);
            const double fc = eval(xc);
            if (fc <= fr) {
                pts[worst] = xc;
                vals[worst] = fc;
                accepted = true;
            }
        } else {
            along(xc, contract, pts[worst]);
            const double fc = eval(xc);
            if (fc < vals[worst]) {
                pts[worst] = xc;
                vals[worst] = fc;
                accepted = true;
            }
        }
        if (!accepted) {
            for (size_t i = 0; i <= dim; ++i) {
                if (i == best) {
                    continue;
                }
                for (size_t k = 0; k < dim; ++k) {
                    pts[i][k] = pts[best][k] + shrink * (pts[i][k] - pts[best][k]);
                }
                vals[i] = eval(pts[i]);
            }
        }
    }

    const size_t best = static_cast<size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    res.x = pts[best];
    res.value = vals[best];
    return res;
}

OptimizationResult optimize_code(const RateProfile& rates, const Code& base, const Objective& kind, int restarts,
                                 std::uint64_t seed, const NelderMeadOptions& options) {
    if (restarts < 1) {
        throw std::invalid_argument("optimize_code: restarts must be >= 1");
    }
    const ObjectiveEvaluator evaluator(rates, base, kind);
    const int dim = base.dim();
    const size_t starts = static_cast<size_t>(restarts) + 2;

    std::vector<NelderMeadResult> runs(starts);
    parallel_for(starts, [&](size_t s) {
        std::vector<double> x0;
        if (s == 0) {
            x0.assign(static_cast<size_t>(dim) * dim, 0.0);
        } else if (s == 1) {
            x0 = params_from_generator(hadamard_generator(base.n));
        } else {
            std::seed_seq seq{seed, static_cast<std::uint64_t>(s)};
            Rng rng(seq);
            std::normal_distribution<double> gauss(0.0, std::numbers::pi / 4.0);
            x0.resize(static_cast<size_t>(dim) * dim);
            for (auto& v : x0) {
                v = gauss(rng);
            }
        }
        runs[s] = nelder_mead(
            [&](std::span<const double> p) { return evaluator(generator_from_params(p, dim)); }, std::move(x0),
            options);
    });

    OptimizationResult out;
    out.seed = seed;
    size_t winner = 0;
    for (size_t s = 0; s < starts; ++s) {
        out.evaluations += runs[s].evaluations;
        if (runs[s].value < runs[winner].value) {
            winner = s;
        }
    }
    out.best_start = static_cast<int>(winner);
    out.best_objective = runs[winner].value;
    out.objective_history = runs[winner].history;
    out.best_generator = generator_from_params(runs[winner].x, dim);
    return out;
}

}  // namespace aqec
