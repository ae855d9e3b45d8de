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

#include "aqec/recovery.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace aqec {

namespace {

// Slack for parameters computed in floating point, e.g. 3 * (1/3) + 0 - 1.
constexpr double kSlack = 1e-12;

std::string fmt(double v) {
    return std::to_string(v);
}

}  // namespace

void RecoveryParams::validate() const {
    if (!(q2 >= -kSlack && q2 <= 2.0 / 3.0 + kSlack)) {
        throw std::invalid_argument("recovery: q2 = " + fmt(q2) + " outside [0, 2/3]");
    }
    if (!(q3 >= -kSlack && q3 <= 1.0 + kSlack)) {
        throw std::invalid_argument("recovery: q3 = " + fmt(q3) + " outside [0, 1]");
    }
    if (2.0 - 3.0 * q2 - q3 < -kSlack) {
        throw std::invalid_argument("recovery: radicand 2 - 3 q2 - q3 = " + fmt(2.0 - 3.0 * q2 - q3) + " is negative");
    }
    if (3.0 * q2 + q3 - 1.0 < -kSlack) {
        throw std::invalid_argument("recovery: radicand 3 q2 + q3 - 1 = " + fmt(3.0 * q2 + q3 - 1.0) + " is negative");
    }
}

bool RecoveryParams::valid() const {
    try {
        validate();
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::vector<CMatrix> recovery_error_set(const RecoveryParams& params) {
    params.validate();
    auto root = [](double x) { return std::sqrt(std::max(x, 0.0)); };
    const CMatrix z = pauli_z();
    const Complex i(0.0, 1.0);
    const double q2 = params.q2;
    const double q3 = params.q3;
    std::vector<CMatrix> a;
    a.push_back(pauli_string(3, {}, z));
    a.push_back(pauli_string(3, {1}, z));
    a.push_back(root(2.0 - 3.0 * q2 - q3) * pauli_string(3, {2}, z) - i * root(3.0 * q2 + q3 - 1.0) * pauli_string(3, {0, 2}, z));
    a.push_back(root(1.0 - q3) * pauli_string(3, {1, 2}, z) - i * root(q3) * pauli_string(3, {0, 1, 2}, z));
    return a;
}

RecoveryParams optimal_q(const ErrorProbabilities& p) {
    if (p.n != 3) {
        throw std::invalid_argument("optimal_q: requires n == 3");
    }
    // Ties go to (2/3, 0); both choices satisfy the correctability property.
    if (p.p[2] >= p.p[3]) {
        return RecoveryParams{2.0 / 3.0, 0.0};
    }
    return RecoveryParams{1.0 / 3.0, 1.0};
}

}  // namespace aqec
