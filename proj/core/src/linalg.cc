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

#include "aqec/linalg.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace aqec {

namespace {

void require_split(const CMatrix& rho, DimSplit split, const char* op) {
    if (split.dim_a < 1 || split.dim_b < 1 || rho.rows() != split.total() || rho.cols() != split.total()) {
        throw std::invalid_argument(
            std::string(op) + ": matrix is " + std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()) +
            " but split is " + std::to_string(split.dim_a) + "x" + std::to_string(split.dim_b));
    }
}

void require_hermitian(const CMatrix& h, const char* op) {
    if (h.rows() != h.cols()) {
        throw std::invalid_argument(std::string(op) + ": matrix is not square");
    }
    double defect = hermiticity_defect(h);
    if (defect > 1e-10) {
        throw std::invalid_argument(std::string(op) + ": matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }
}

}  // namespace

CMatrix identity(int dim) {
    return CMatrix::Identity(dim, dim);
}

CMatrix pauli_x() {
    CMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

CMatrix pauli_z() {
    CMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

CMatrix hadamard() {
    CMatrix m(2, 2);
    m << 1, 1, 1, -1;
    return m / std::sqrt(2.0);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CMatrix kron_all(std::span<const CMatrix> factors) {
    CMatrix out = identity(1);
    for (const auto& f : factors) {
        out = kron(out, f);
    }
    return out;
}

CMatrix partial_transpose(const CMatrix& rho, DimSplit split, Subsystem which) {
    require_split(rho, split, "partial_transpose");
    const int da = split.dim_a;
    const int db = split.dim_b;
    CMatrix out(rho.rows(), rho.cols());
    for (int a = 0; a < da; ++a) {
        for (int b = 0; b < db; ++b) {
            for (int a2 = 0; a2 < da; ++a2) {
                for (int b2 = 0; b2 < db; ++b2) {
                    if (which == Subsystem::kB) {
                        out(a * db + b, a2 * db + b2) = rho(a * db + b2, a2 * db + b);
                    } else {
                        out(a * db + b, a2 * db + b2) = rho(a2 * db + b, a * db + b2);
                    }
                }
            }
        }
    }
    return out;
}

CMatrix partial_trace(const CMatrix& rho, DimSplit split, Subsystem traced) {
    require_split(rho, split, "partial_trace");
    const int da = split.dim_a;
    const int db = split.dim_b;
    if (traced == Subsystem::kA) {
        CMatrix out = CMatrix::Zero(db, db);
        for (int a = 0; a < da; ++a) {
            out += rho.block(a * db, a * db, db, db);
        }
        return out;
    }
    CMatrix out(da, da);
    for (int a = 0; a < da; ++a) {
        for (int a2 = 0; a2 < da; ++a2) {
            out(a, a2) = rho.block(a * db, a2 * db, db, db).trace();
        }
    }
    return out;
}

double hermiticity_defect(const CMatrix& a) {
    if (a.rows() != a.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& a, double tol) {
    return hermiticity_defect(a) <= tol;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

std::vector<double> hermitian_eigenvalues(const CMatrix& h) {
    require_hermitian(h, "hermitian_eigenvalues");
    CMatrix sym = (h + h.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end());
    return out;
}

double trace_norm(const CMatrix& a) {
    if (a.rows() == a.cols() && is_hermitian(a, 1e-12)) {
        double s = 0.0;
        for (double v : hermitian_eigenvalues(a)) {
            s += std::abs(v);
        }
        return s;
    }
    Eigen::JacobiSVD<CMatrix> svd(a);
    return svd.singularValues().sum();
}

CMatrix unitary_from_generator(const CMatrix& h) {
    require_hermitian(h, "unitary_from_generator");
    CMatrix sym = (h + h.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
    const CMatrix& v = solver.eigenvectors();
    CVector phases(v.cols());
    for (Eigen::Index i = 0; i < v.cols(); ++i) {
        phases(i) = std::polar(1.0, solver.eigenvalues()(i));
    }
    return v * phases.asDiagonal() * v.adjoint();
}

CMatrix haar_unitary(int dim, Rng& rng) {
    if (dim < 1) {
        throw std::invalid_argument("haar_unitary: dim must be >= 1");
    }
    std::normal_distribution<double> gauss(0.0, 1.0 / std::sqrt(2.0));
    CMatrix z(dim, dim);
    // Column-major fill order is part of the determinism contract.
    for (int j = 0; j < dim; ++j) {
        for (int i = 0; i < dim; ++i) {
            double re = gauss(rng);
            double im = gauss(rng);
            z(i, j) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
    const CMatrix& r = qr.matrixQR();
    for (int j = 0; j < dim; ++j) {
        Complex d = r(j, j);
        double mag = std::abs(d);
        Complex phase = mag > 0 ? d / mag : Complex(1.0, 0.0);
        q.col(j) *= phase;
    }
    return q;
}

}  // namespace aqec
