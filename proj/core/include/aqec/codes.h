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

#ifndef AQEC_CODES_H
#define AQEC_CODES_H

#include <string_view>

#include "aqec/linalg.h"

namespace aqec {

/// A logical qubit encoded in n physical qubits, spanned by two orthonormal
/// codewords.
struct Code {
    int n = 0;
    CVector word0;
    CVector word1;

    int dim() const {
        return 1 << n;
    }

    /// |word0><word0| + |word1><word1|.
    CMatrix projector() const;
};

/// Ancilla-qubit ⊗ code density matrix. The ancilla is factor A.
struct ProbeState {
    CMatrix rho;
    DimSplit split;
};

/// |+>^n and |->^n.
Code repetition_code(int n);

/// |0,+^(n-1)> and |1,-^(n-1)>, with the computational-basis qubit placed at
/// `position`.
Code rotated_code(int n, int position = 0);

/// |+,-,-,-> and |+,+,+,->.
Code anti_aligned_code4();

/// Applies u to both codewords. Throws std::invalid_argument unless u is a
/// unitary of matching dimension.
Code transform_code(const Code& code, const CMatrix& u);

/// (|0>|word0> + |1>|word1>) / sqrt(2), as a density matrix.
ProbeState probe_state(const Code& code);

/// Resolves a named code: "repetition", "rotated", "rotated[k]", "anti4" (n=4
/// only) or "random(seed)" (Haar transform of the repetition code). Throws
/// ConfigError on anything else.
Code code_from_preset(std::string_view preset, int n);

}  // namespace aqec

#endif
