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

#include "aqec/codes.h"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "aqec/errors.h"

namespace aqec {

namespace {

CVector ket(double a, double b) {
    CVector v(2);
    v << a, b;
    return v;
}

CVector plus() {
    return ket(1.0, 1.0) / std::sqrt(2.0);
}

CVector minus() {
    return ket(1.0, -1.0) / std::sqrt(2.0);
}

CVector product(const std::vector<CVector>& factors) {
    CMatrix out = identity(1);
    for (const auto& f : factors) {
        out = kron(out, f);
    }
    return out.col(0);
}

void require_n(int n) {
    if (n < 2 || n > 6) {
        throw std::invalid_argument("code: n must be in [2, 6], got " + std::to_string(n));
    }
}

}  // namespace

CMatrix Code::projector() const {
    return word0 * word0.adjoint() + word1 * word1.adjoint();
}

Code repetition_code(int n) {
    require_n(n);
    return Code{n, product(std::vector<CVector>(n, plus())), product(std::vector<CVector>(n, minus()))};
}

Code rotated_code(int n, int position) {
    require_n(n);
    if (position < 0 || position >= n) {
        throw std::invalid_argument("rotated_code: position out of range");
    }
    std::vector<CVector> a(n, plus());
    std::vector<CVector> b(n, minus());
    a[position] = ket(1.0, 0.0);
    b[position] = ket(0.0, 1.0);
    return Code{n, product(a), product(b)};
}

Code anti_aligned_code4() {
    return Code{4, product({plus(), minus(), minus(), minus()}), product({plus(), plus(), plus(), minus()})};
}

Code transform_code(const Code& code, const CMatrix& u) {
    if (u.rows() != code.dim() || u.cols() != code.dim()) {
        throw std::invalid_argument("transform_code: unitary has wrong dimension");
    }
    if (max_abs_diff(u.adjoint() * u, identity(code.dim())) > 1e-10) {
        throw std::invalid_argument("transform_code: matrix is not unitary");
    }
    return Code{code.n, u * code.word0, u * code.word1};
}

ProbeState probe_state(const Code& code) {
    const int d = code.dim();
    CVector psi = CVector::Zero(2 * d);
    psi.head(d) = code.word0;
    psi.tail(d) = code.word1;
    psi /= std::sqrt(2.0);
    return ProbeState{psi * psi.adjoint(), DimSplit{2, d}};
}

Code code_from_preset(std::string_view preset, int n) {
    auto bad = [&](const std::string& why) {
        return ConfigError("code: '" + std::string(preset) + "' " + why);
    };
    auto parse_int = [&](std::string_view digits) {
        unsigned long long v = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
            throw bad("has a malformed integer argument");
        }
        return v;
    };
    if (n < 2 || n > 6) {
        throw ConfigError("n: must be in [2, 6]");
    }
    if (preset == "repetition") {
        return repetition_code(n);
    }
    if (preset == "rotated") {
        return rotated_code(n, 0);
    }
    if (preset.starts_with("rotated[") && preset.ends_with("]")) {
        auto k = parse_int(preset.substr(8, preset.size() - 9));
        if (k >= static_cast<unsigned long long>(n)) {
            throw bad("names a qubit outside [0, n)");
        }
        return rotated_code(n, static_cast<int>(k));
    }
    if (preset == "anti4") {
        if (n != 4) {
            throw bad("is only defined for n = 4");
        }
        return anti_aligned_code4();
    }
    if (preset.starts_with("random(") && preset.ends_with(")")) {
        Rng rng(parse_int(preset.substr(7, preset.size() - 8)));
        return transform_code(repetition_code(n), haar_unitary(1 << n, rng));
    }
    throw bad("is not a known preset (repetition, rotated, rotated[k], anti4, random(seed))");
}

}  // namespace aqec
