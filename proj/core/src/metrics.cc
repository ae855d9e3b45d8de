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

#include "aqec/metrics.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "aqec/errors.h"

namespace aqec {

DeviationReport deviation(const CMatrix& p, std::span<const CMatrix> errors, double pair_tol) {
    const Complex tr = p.trace();
    if (std::abs(tr) <= 1e-14) {
        throw std::invalid_argument("deviation: operator has zero trace");
    }
    const Eigen::Index m = static_cast<Eigen::Index>(errors.size());
    // B_i = E_i P, so P E_i^dagger E_j P = B_i^dagger B_j.
    std::vector<CMatrix> b;
    b.reserve(errors.size());
    for (const auto& e : errors) {
        if (e.rows() != p.rows() || e.cols() != p.cols()) {
            throw std::invalid_argument("deviation: error operator dimension does not match");
        }
        b.push_back(e * p);
    }
    DeviationReport r;
    r.alpha = CMatrix::Zero(m, m);
    r.lambda_norms = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            CMatrix peep = b[i].adjoint() * b[j];
            Complex alpha = peep.trace() / tr;
            CMatrix lambda = peep - alpha * p;
            double norm = lambda.squaredNorm();  // Tr(Lambda Lambda^dagger)
            r.alpha(i, j) = alpha;
            r.lambda_norms(i, j) = norm;
            r.delta_c += norm;
            if (norm > pair_tol) {
                r.violating_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return r;
}

DeviationReport deviation(const CMatrix& p, const KrausSet& kraus, double pair_tol) {
    return deviation(p, std::span<const CMatrix>(kraus.elements), pair_tol);
}

void write_deviation_csv(std::ostream& out, const DeviationReport& report) {
    out << "i,j,re_alpha,im_alpha,lambda_norm\n";
    const auto prec = out.precision(17);
    for (Eigen::Index i = 0; i < report.alpha.rows(); ++i) {
        for (Eigen::Index j = 0; j < report.alpha.cols(); ++j) {
            out << i << ',' << j << ',' << report.alpha(i, j).real() << ',' << report.alpha(i, j).imag() << ','
                << report.lambda_norms(i, j) << '\n';
        }
    }
    out.precision(prec);
}

KlVerdict kl_check(const Code& code, std::span<const CMatrix> errors, double tol) {
    const CMatrix p = code.projector();
    const Complex tr = p.trace();
    std::vector<CMatrix> b;
    b.reserve(errors.size());
    for (const auto& e : errors) {
        if (e.rows() != p.rows() || e.cols() != p.cols()) {
            throw std::invalid_argument("kl_check: error operator dimension does not match code");
        }
        b.push_back(e * p);
    }
    KlVerdict v{true, 0.0};
    for (size_t i = 0; i < b.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
            CMatrix peep = b[i].adjoint() * b[j];
            Complex alpha = peep.trace() / tr;
            double viol = (peep - alpha * p).cwiseAbs().maxCoeff();
            v.max_violation = std::max(v.max_violation, viol);
        }
    }
    v.satisfied = v.max_violation <= tol;
    return v;
}

double negativity(const CMatrix& rho, DimSplit split) {
    CMatrix pt = partial_transpose(rho, split, Subsystem::kB);
    std::vector<double> ev = hermitian_eigenvalues(pt);
    double norm_sum = 0.0;
    double spectral = 0.0;
    for (double l : ev) {
        norm_sum += std::abs(l);
        spectral += std::abs(l) - l;
    }
    // The trace-norm form assumes unit trace; the spectral form does not.
    const double via_norm = norm_sum - rho.trace().real();
    if (std::abs(via_norm - spectral) > 1e-10) {
        throw NumericalError("negativity: trace-norm and spectral forms disagree (" + std::to_string(via_norm) +
                             " vs " + std::to_string(spectral) + ")");
    }
    return spectral;
}

RateEstimate initial_rate(const std::function<double(double)>& f, double h) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("initial_rate: h must be > 0");
    }
    const double f0 = f(0.0);
    const double d_full = (f(h) - f0) / h;
    const double d_half = (f(h / 2) - f0) / (h / 2);
    return RateEstimate{d_full, 2.0 * d_half - d_full};
}

double closed_form_delta(CodeClass code_class, const ErrorProbabilities& p) {
    if (p.n != 3) {
        throw std::invalid_argument("closed_form_delta: requires n == 3");
    }
    auto r = [&](int i, int j) { return std::sqrt(std::max(p.p[i] * p.p[j], 0.0)); };
    if (code_class == CodeClass::kStandard) {
        return 2.0 * (r(0, 3) + 3.0 * r(1, 2));
    }
    return 2.0 * (r(0, 1) + 2.0 * r(1, 2) + r(2, 3));
}

RegimeVerdict regime_inequality(const ErrorProbabilities& p) {
    const int n = p.n;
    auto r = [&](int i, int j) { return std::sqrt(std::max(p.p[i] * p.p[j], 0.0)); };
    RegimeVerdict v;
    for (int i = 0; i <= n; ++i) {
        v.lhs += static_cast<double>(binomial(n, i)) * r(i, n - i);
    }
    for (int i = 0; i < n; ++i) {
        v.rhs += 2.0 * static_cast<double>(binomial(n - 1, i)) * r(i, i + 1);
    }
    v.rotated_optimal = v.lhs > v.rhs;
    return v;
}

std::pair<std::vector<SqrtTerm>, std::vector<SqrtTerm>> regime_terms(int n) {
    auto collect = [](const std::map<std::pair<int, int>, long long>& m) {
        std::vector<SqrtTerm> out;
        for (const auto& [ij, c] : m) {
            if (c != 0) {
                out.push_back(SqrtTerm{c, ij.first, ij.second});
            }
        }
        return out;
    };
    std::map<std::pair<int, int>, long long> lhs;
    std::map<std::pair<int, int>, long long> rhs;
    for (int i = 0; i <= n; ++i) {
        lhs[{std::min(i, n - i), std::max(i, n - i)}] += binomial(n, i);
    }
    for (int i = 0; i < n; ++i) {
        rhs[{i, i + 1}] += 2 * binomial(n - 1, i);
    }
    return {collect(lhs), collect(rhs)};
}

}  // namespace aqec
