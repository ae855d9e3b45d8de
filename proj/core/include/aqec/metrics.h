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

#ifndef AQEC_METRICS_H
#define AQEC_METRICS_H

#include <functional>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "aqec/channel.h"
#include "aqec/codes.h"
#include "aqec/linalg.h"

namespace aqec {

/// Knill-Laflamme deviation of an error set on a code-supported operator P:
///   alpha_ij  = Tr(P E_i^dagger E_j P) / Tr(P)
///   Lambda_ij = P E_i^dagger E_j P - alpha_ij P
///   delta_c   = sum_ij Tr(Lambda_ij Lambda_ij^dagger)
/// P may be the code projector or the reduced probe state P/2; the two give
/// different normalisations of delta_c.
struct DeviationReport {
    CMatrix alpha;
    Eigen::MatrixXd lambda_norms;
    double delta_c = 0.0;
    std::vector<std::pair<int, int>> violating_pairs;
};

/// Pairs with Tr(Lambda Lambda^dagger) above `pair_tol` are reported as
/// violating. Throws std::invalid_argument for zero-trace P or shape mismatch.
DeviationReport deviation(const CMatrix& p, std::span<const CMatrix> errors, double pair_tol = 1e-10);
DeviationReport deviation(const CMatrix& p, const KrausSet& kraus, double pair_tol = 1e-10);

/// One row per (i, j): i,j,re_alpha,im_alpha,lambda_norm.
void write_deviation_csv(std::ostream& out, const DeviationReport& report);

struct KlVerdict {
    bool satisfied = false;
    double max_violation = 0.0;
};

/// Checks P E_i^dagger E_j P = alpha_ij P elementwise to `tol`.
KlVerdict kl_check(const Code& code, std::span<const CMatrix> errors, double tol = 1e-10);

/// ||rho^{T_B}||_1 - 1, cross-checked against sum_i (|lambda_i| - lambda_i).
/// Throws NumericalError if the two disagree by more than 1e-10 and
/// std::invalid_argument for non-Hermitian input.
double negativity(const CMatrix& rho, DimSplit split);

struct RateEstimate {
    double forward = 0.0;     // (f(h) - f(0)) / h
    double richardson = 0.0;  // 2 D(h/2) - D(h)
};

/// Slope of f at 0 from forward differences.
RateEstimate initial_rate(const std::function<double(double)>& f, double h = 1e-3);

enum class CodeClass { kStandard, kRotated };

/// The three-qubit closed forms
///   standard: 2 (sqrt(p0 p3) + 3 sqrt(p1 p2))
///   rotated:  2 (sqrt(p0 p1) + 2 sqrt(p1 p2) + sqrt(p2 p3))
/// Note these use square roots of probability products, whereas deviation()
/// on the Kraus set produces terms linear in p_i p_j.
double closed_form_delta(CodeClass code_class, const ErrorProbabilities& p);

struct RegimeVerdict {
    double lhs = 0.0;
    double rhs = 0.0;
    bool rotated_optimal = false;
};

/// lhs = sum_i C(n,i) sqrt(p_i p_{n-i}), rhs = 2 sum_i C(n-1,i) sqrt(p_i p_{i+1}).
/// The rotated code is preferred when lhs > rhs.
RegimeVerdict regime_inequality(const ErrorProbabilities& p);

/// coefficient * sqrt(p_i p_j) with i <= j.
struct SqrtTerm {
    long long coefficient = 0;
    int i = 0;
    int j = 0;

    bool operator==(const SqrtTerm&) const = default;
};

/// Both sides of regime_inequality as merged integer term lists sorted by (i, j).
std::pair<std::vector<SqrtTerm>, std::vector<SqrtTerm>> regime_terms(int n);

}  // namespace aqec

#endif
