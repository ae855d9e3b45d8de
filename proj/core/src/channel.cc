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

#include "aqec/channel.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "aqec/errors.h"

namespace aqec {

std::string_view to_string(ErrorKind kind) {
    return kind == ErrorKind::kDephasing ? "dephasing" : "bitflip";
}

ErrorKind parse_error_kind(std::string_view text) {
    if (text == "dephasing") {
        return ErrorKind::kDephasing;
    }
    if (text == "bitflip") {
        return ErrorKind::kBitflip;
    }
    throw ConfigError("kind: expected 'dephasing' or 'bitflip', got '" + std::string(text) + "'");
}

RateProfile RateProfile::make(std::vector<double> gamma, ErrorKind kind) {
    int n = static_cast<int>(gamma.size());
    if (n < 2 || n > 6) {
        throw ConfigError("gamma: need between 2 and 6 rates (one per error weight), got " + std::to_string(n));
    }
    for (size_t k = 0; k < gamma.size(); ++k) {
        if (!(gamma[k] >= 0.0) || !std::isfinite(gamma[k])) {
            throw ConfigError("gamma: rate for weight " + std::to_string(k + 1) + " must be finite and >= 0");
        }
    }
    return RateProfile{n, std::move(gamma), kind};
}

double ErrorProbabilities::grouped(int k) const {
    return static_cast<double>(binomial(n, k)) * p[k];
}

double ErrorProbabilities::total() const {
    double s = 0.0;
    for (int k = 0; k <= n; ++k) {
        s += grouped(k);
    }
    return s;
}

std::vector<QubitSubset> ordered_subsets(int n) {
    std::vector<QubitSubset> out;
    out.reserve(size_t{1} << n);
    for (int k = 0; k <= n; ++k) {
        // Lexicographic k-combinations of {0..n-1}.
        QubitSubset c(k);
        for (int i = 0; i < k; ++i) {
            c[i] = i;
        }
        while (true) {
            out.push_back(c);
            int i = k - 1;
            while (i >= 0 && c[i] == n - k + i) {
                --i;
            }
            if (i < 0) {
                break;
            }
            ++c[i];
            for (int j = i + 1; j < k; ++j) {
                c[j] = c[j - 1] + 1;
            }
        }
    }
    return out;
}

CMatrix pauli_string(int n, const QubitSubset& subset, const CMatrix& op) {
    std::vector<CMatrix> factors(n, identity(2));
    for (int q : subset) {
        factors.at(q) = op;
    }
    return kron_all(factors);
}

CMatrix hadamard_all(int n) {
    std::vector<CMatrix> factors(n, hadamard());
    return kron_all(factors);
}

CMatrix KrausSet::completeness() const {
    const Eigen::Index d = Eigen::Index{1} << n;
    CMatrix sum = CMatrix::Zero(d, d);
    for (const auto& e : elements) {
        sum += e.adjoint() * e;
    }
    return sum;
}

long long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

long long anticommuting_count(int n, int k, int w) {
    long long s = 0;
    for (int j = 1; j <= w; j += 2) {
        s += binomial(w, j) * binomial(n - w, k - j);
    }
    return s;
}

std::vector<double> decay_factors(const RateProfile& rates, double t) {
    const int n = rates.n;
    std::vector<double> f(n + 1);
    for (int w = 0; w <= n; ++w) {
        double exponent = 0.0;
        for (int k = 1; k <= n; ++k) {
            exponent += rates.gamma[k - 1] * static_cast<double>(anticommuting_count(n, k, w));
        }
        f[w] = std::exp(-4.0 * t * exponent);
    }
    return f;
}

namespace {

/// K_k(w) = sum_j (-1)^j C(w,j) C(n-w,k-j).
long long krawtchouk(int n, int k, int w) {
    long long s = 0;
    for (int j = 0; j <= std::min(w, k); ++j) {
        long long term = binomial(w, j) * binomial(n - w, k - j);
        s += (j % 2 == 0) ? term : -term;
    }
    return s;
}

}  // namespace

ErrorProbabilities error_probabilities(const RateProfile& rates, double t) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("error_probabilities: t must be >= 0");
    }
    const int n = rates.n;
    std::vector<double> f = decay_factors(rates, t);
    ErrorProbabilities out{n, t, std::vector<double>(n + 1)};
    const double scale = std::ldexp(1.0, -n);
    // Orthogonality: sum_w C(n,w) K_k(w) K_l(w) = 2^n C(n,k) delta_kl.
    for (int k = 0; k <= n; ++k) {
        double s = 0.0;
        for (int w = 0; w <= n; ++w) {
            s += static_cast<double>(binomial(n, w) * krawtchouk(n, k, w)) * f[w];
        }
        out.p[k] = scale * s / static_cast<double>(binomial(n, k));
        if (out.p[k] < -1e-9) {
            throw NumericalError("error_probabilities: p_" + std::to_string(k) + " = " + std::to_string(out.p[k]) +
                                 " is negative");
        }
    }
    return out;
}

ErrorProbabilities closed_form_probabilities3(const RateProfile& rates, double t) {
    if (rates.n != 3) {
        throw std::invalid_argument("closed_form_probabilities3: requires n == 3");
    }
    const double g1 = rates.gamma[0];
    const double g2 = rates.gamma[1];
    const double g3 = rates.gamma[2];
    const double pre = 1.0 / (2.0 * std::sqrt(2.0));
    auto root = [](double x) { return std::sqrt(std::max(x, 0.0)); };

    double sp0 = pre * std::exp(-4.0 * (3 * g1 + 2 * g2 + g3) * t) *
                 root(3 * std::exp(8.0 * (2 * g1 + g2 + g3) * t) + std::exp(8.0 * (3 * g1 + 2 * g2 + g3) * t) +
                      3 * std::exp(4.0 * (5 * g1 + 2 * g2 + g3) * t) + std::exp(4.0 * (3 * g1 + 4 * g2 + g3) * t));
    const double a = std::exp(-8.0 * (g1 + g2) * t);
    const double b = std::exp(-4.0 * (3 * g1 + g3) * t);
    const double c = std::exp(-4.0 * (g1 + 2 * g2 + g3) * t);
    double sp1 = pre * root(1 - a - b + c);
    double sp2 = pre * root(1 - a + b - c);
    double sp3 = pre * root(1 + 3 * a - b - 3 * c);
    return ErrorProbabilities{3, t, {sp0 * sp0, sp1 * sp1, sp2 * sp2, sp3 * sp3}};
}

KrausSet kraus_set(const RateProfile& rates, double t) {
    ErrorProbabilities probs = error_probabilities(rates, t);
    KrausSet out;
    out.n = rates.n;
    out.kind = rates.kind;
    out.subsets = ordered_subsets(rates.n);
    out.elements.reserve(out.subsets.size());
    const CMatrix z = pauli_z();
    for (const auto& s : out.subsets) {
        double weight = std::sqrt(std::max(probs.p[s.size()], 0.0));
        out.elements.push_back(weight * pauli_string(rates.n, s, z));
    }
    if (rates.kind == ErrorKind::kBitflip) {
        const CMatrix h = hadamard_all(rates.n);
        for (auto& e : out.elements) {
            e = h * e * h;
        }
    }
    return out;
}

CMatrix apply_channel(const CMatrix& rho, const KrausSet& kraus, DimSplit split) {
    const int d = 1 << kraus.n;
    if (split.dim_b != d || rho.rows() != split.total() || rho.cols() != split.total()) {
        throw std::invalid_argument("apply_channel: state is " + std::to_string(rho.rows()) +
                                    "-dimensional, expected ancilla x " + std::to_string(d));
    }
    const int da = split.dim_a;
    CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
    for (const auto& e : kraus.elements) {
        const CMatrix e_adj = e.adjoint();
        for (int a = 0; a < da; ++a) {
            for (int a2 = 0; a2 < da; ++a2) {
                out.block(a * d, a2 * d, d, d).noalias() += e * rho.block(a * d, a2 * d, d, d) * e_adj;
            }
        }
    }
    return out;
}

LindbladGenerator LindbladGenerator::from_system_operators(const std::vector<CMatrix>& ops, int ancilla_dim) {
    if (ops.empty()) {
        throw std::invalid_argument("LindbladGenerator: no jump operators");
    }
    LindbladGenerator gen;
    gen.dim = static_cast<int>(ops.front().rows()) * ancilla_dim;
    gen.decay_sum = SparseCMatrix(gen.dim, gen.dim);
    const CMatrix id_a = identity(ancilla_dim);
    for (const auto& op : ops) {
        if (op.rows() * ancilla_dim != gen.dim || op.cols() != op.rows()) {
            throw std::invalid_argument("LindbladGenerator: jump operators must share one square shape");
        }
        SparseCMatrix l = kron(id_a, op).sparseView();
        SparseCMatrix ldl = SparseCMatrix(l.adjoint()) * l;
        gen.decay_sum += ldl;
        gen.jumps.push_back(std::move(l));
    }
    gen.decay_sum.prune(Complex(0.0, 0.0));
    return gen;
}

CMatrix LindbladGenerator::derivative(const CMatrix& rho) const {
    CMatrix out = -(decay_sum * rho);
    out -= rho * decay_sum;
    for (const auto& l : jumps) {
        CMatrix left = l * rho;
        out += 2.0 * (left * l.adjoint());
    }
    return out;
}

LindbladGenerator lindblad_generator(const RateProfile& rates, int ancilla_dim) {
    const CMatrix op = rates.kind == ErrorKind::kDephasing ? pauli_z() : pauli_x();
    std::vector<CMatrix> ops;
    for (const auto& s : ordered_subsets(rates.n)) {
        if (s.empty()) {
            continue;
        }
        ops.push_back(std::sqrt(rates.gamma[s.size() - 1]) * pauli_string(rates.n, s, op));
    }
    return LindbladGenerator::from_system_operators(ops, ancilla_dim);
}

namespace {

void rk4_advance(const LindbladGenerator& gen, CMatrix& rho, double duration, double dt) {
    if (duration <= 0.0) {
        return;
    }
    const long steps = std::max(1L, static_cast<long>(std::ceil(duration / dt - 1e-9)));
    const double h = duration / static_cast<double>(steps);
    for (long s = 0; s < steps; ++s) {
        CMatrix k1 = gen.derivative(rho);
        CMatrix k2 = gen.derivative(rho + (h / 2) * k1);
        CMatrix k3 = gen.derivative(rho + (h / 2) * k2);
        CMatrix k4 = gen.derivative(rho + h * k3);
        rho += (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
}

}  // namespace

CMatrix integrate_lindblad(const LindbladGenerator& gen, const CMatrix& rho0, double t, double dt) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("integrate_lindblad: dt must be > 0");
    }
    if (rho0.rows() != gen.dim || rho0.cols() != gen.dim) {
        throw std::invalid_argument("integrate_lindblad: state dimension does not match generator");
    }
    CMatrix rho = rho0;
    rk4_advance(gen, rho, t, dt);
    return rho;
}

std::vector<CMatrix> integrate_lindblad_trajectory(const LindbladGenerator& gen, const CMatrix& rho0,
                                                   std::span<const double> times, double dt) {
    if (!std::is_sorted(times.begin(), times.end())) {
        throw std::invalid_argument("integrate_lindblad_trajectory: times must be ascending");
    }
    std::vector<CMatrix> out;
    out.reserve(times.size());
    CMatrix rho = integrate_lindblad(gen, rho0, 0.0, dt);
    double now = 0.0;
    for (double t : times) {
        rk4_advance(gen, rho, t - now, dt);
        now = t;
        out.push_back(rho);
    }
    return out;
}

}  // namespace aqec
