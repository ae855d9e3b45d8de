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

#ifndef AQEC_CHANNEL_H
#define AQEC_CHANNEL_H

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/SparseCore>

#include "aqec/linalg.h"

namespace aqec {

enum class ErrorKind { kDephasing, kBitflip };

std::string_view to_string(ErrorKind kind);

/// Parses "dephasing" or "bitflip". Throws ConfigError otherwise.
ErrorKind parse_error_kind(std::string_view text);

/// Lindblad rates gamma[k-1] for simultaneous errors on k qubits, in units of
/// the characteristic rate. Every k-subset of qubits shares the same rate.
struct RateProfile {
    int n = 0;
    std::vector<double> gamma;
    ErrorKind kind = ErrorKind::kDephasing;

    /// Builds a profile with n = gamma.size(). Requires 2 <= n <= 6 and
    /// gamma_k >= 0; throws ConfigError otherwise.
    static RateProfile make(std::vector<double> gamma, ErrorKind kind = ErrorKind::kDephasing);
};

/// Per-configuration error probabilities: p[k] is the probability of one
/// specific weight-k Pauli string, so sum_k C(n,k) p[k] == 1.
struct ErrorProbabilities {
    int n = 0;
    double t = 0.0;
    std::vector<double> p;

    /// C(n,k) * p[k], the total weight-k probability.
    double grouped(int k) const;
    double total() const;
};

/// A qubit subset, qubit 0 being the leftmost tensor factor.
using QubitSubset = std::vector<int>;

/// All subsets of {0..n-1}, ordered by size and then lexicographically. This is
/// the Kraus element order; for n=3 it coincides with the E0..E7 numbering of
/// the usual three-qubit dephasing table.
std::vector<QubitSubset> ordered_subsets(int n);

/// The n-qubit Pauli string with `op` on every qubit in `subset`.
CMatrix pauli_string(int n, const QubitSubset& subset, const CMatrix& op);

/// Hadamard on every one of n qubits.
CMatrix hadamard_all(int n);

struct KrausSet {
    int n = 0;
    ErrorKind kind = ErrorKind::kDephasing;
    std::vector<QubitSubset> subsets;
    std::vector<CMatrix> elements;

    /// sum_i E_i^dagger E_i.
    CMatrix completeness() const;
};

/// Binomial coefficient; zero outside 0 <= k <= n.
long long binomial(int n, int k);

/// Number of weight-k strings that anticommute with a fixed weight-w coherence:
/// sum over odd j of C(w,j) C(n-w,k-j).
long long anticommuting_count(int n, int k, int w);

/// Coherence decay factors f_0..f_n with
/// f_w = exp(-4 t sum_k gamma_k anticommuting_count(n,k,w)).
std::vector<double> decay_factors(const RateProfile& rates, double t);

/// Per-configuration error probabilities at time t, obtained by inverting the
/// Krawtchouk relation f_w = sum_k K_k(w) p_k. Throws NumericalError when a
/// probability comes out below -1e-9.
ErrorProbabilities error_probabilities(const RateProfile& rates, double t);

/// The three-qubit probabilities in their closed exponential form, evaluated as
/// printed (square roots first, then squared). Requires rates.n == 3.
ErrorProbabilities closed_form_probabilities3(const RateProfile& rates, double t);

/// Kraus elements sqrt(p_|S|) * Pauli(S) for every subset S. Bitflip sets are the
/// Hadamard conjugates of the dephasing set.
KrausSet kraus_set(const RateProfile& rates, double t);

/// sum_i (I_A ⊗ E_i) rho (I_A ⊗ E_i)^dagger. The ancilla factor is untouched.
CMatrix apply_channel(const CMatrix& rho, const KrausSet& kraus, DimSplit split);

using SparseCMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

/// Jump operators acting on ancilla ⊗ system. The master equation is
/// d rho/dt = sum_j [2 L_j rho L_j^dagger - {L_j^dagger L_j, rho}].
struct LindbladGenerator {
    int dim = 0;
    std::vector<SparseCMatrix> jumps;
    SparseCMatrix decay_sum;  // sum_j L_j^dagger L_j

    /// Embeds each system operator as I_{ancilla_dim} ⊗ L.
    static LindbladGenerator from_system_operators(const std::vector<CMatrix>& ops, int ancilla_dim);

    /// Right-hand side of the master equation at rho.
    CMatrix derivative(const CMatrix& rho) const;
};

/// Jump operators sqrt(gamma_|S|) Pauli(S) for every nonempty S.
LindbladGenerator lindblad_generator(const RateProfile& rates, int ancilla_dim = 2);

/// Fixed-step RK4 from 0 to t. The step is t / ceil(t / dt).
CMatrix integrate_lindblad(const LindbladGenerator& gen, const CMatrix& rho0, double t, double dt = 1e-3);

/// States at each of the ascending times, integrated in one pass with step <= dt.
std::vector<CMatrix> integrate_lindblad_trajectory(const LindbladGenerator& gen, const CMatrix& rho0,
                                                   std::span<const double> times, double dt = 1e-3);

}  // namespace aqec

#endif
