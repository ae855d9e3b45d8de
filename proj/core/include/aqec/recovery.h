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

#ifndef AQEC_RECOVERY_H
#define AQEC_RECOVERY_H

#include <vector>

#include "aqec/channel.h"
#include "aqec/linalg.h"

namespace aqec {

/// Weights of the correctable three-qubit error set. Valid when
/// 0 <= q2 <= 2/3, 0 <= q3 <= 1 and 1 <= 3 q2 + q3 <= 2 (the last pair keeps
/// both square-root arguments of A2 nonnegative).
struct RecoveryParams {
    double q2 = 2.0 / 3.0;
    double q3 = 0.0;

    /// Throws std::invalid_argument naming the first violated constraint.
    void validate() const;
    bool valid() const;
};

/// The operators A0..A3 on three qubits:
///   A0 = I⊗I⊗I
///   A1 = I⊗Z⊗I
///   A2 = sqrt(2 - 3q2 - q3) I⊗I⊗Z - i sqrt(3q2 + q3 - 1) Z⊗I⊗Z
///   A3 = sqrt(1 - q3) I⊗Z⊗Z - i sqrt(q3) Z⊗Z⊗Z
/// The set is not normalised as a channel.
std::vector<CMatrix> recovery_error_set(const RecoveryParams& params);

/// q2 = 2/3, q3 = 0 when p2 >= p3, else q2 = 1/3, q3 = 1. Requires n == 3.
RecoveryParams optimal_q(const ErrorProbabilities& p);

}  // namespace aqec

#endif
