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

#ifndef AQEC_LINALG_H
#define AQEC_LINALG_H

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace aqec {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Seeded generator handle. One handle per task; parallel work seeds its own.
using Rng = std::mt19937_64;

enum class Subsystem { kA, kB };

/// Bipartition of a Hilbert space of dimension dim_a * dim_b. Factor A is the
/// left (most significant) tensor factor.
struct DimSplit {
    int dim_a = 1;
    int dim_b = 1;

    int total() const {
        return dim_a * dim_b;
    }
};

CMatrix identity(int dim);
CMatrix pauli_x();
CMatrix pauli_z();
CMatrix hadamard();

/// Kronecker product a ⊗ b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Left-to-right Kronecker product of all factors. Empty input gives the 1x1 identity.
CMatrix kron_all(std::span<const CMatrix> factors);

/// Transposes the chosen tensor factor of rho. Throws std::invalid_argument
/// when rho is not (dim_a*dim_b)-square.
CMatrix partial_transpose(const CMatrix& rho, DimSplit split, Subsystem which);

/// Traces out the chosen factor; the result lives on the other one.
CMatrix partial_trace(const CMatrix& rho, DimSplit split, Subsystem traced);

/// max |A - A^dagger| elementwise.
double hermiticity_defect(const CMatrix& a);

bool is_hermitian(const CMatrix& a, double tol = 1e-10);

/// Largest elementwise magnitude of a - b. Shapes must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Ascending eigenvalues of a Hermitian matrix (checked to 1e-10).
std::vector<double> hermitian_eigenvalues(const CMatrix& h);

/// Sum of singular values. Hermitian inputs take the eigenvalue path.
double trace_norm(const CMatrix& a);

/// exp(i h) for Hermitian h, computed through the spectral decomposition so
/// the result is unitary to rounding.
CMatrix unitary_from_generator(const CMatrix& h);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the columns
/// rephased by the diagonal of R.
CMatrix haar_unitary(int dim, Rng& rng);

}  // namespace aqec

#endif
