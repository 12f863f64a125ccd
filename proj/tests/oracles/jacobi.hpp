// Copyright 2026 The qmatch Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only eigenvalue oracle. Plain std::vector storage and a cyclic
// Jacobi sweep; no dependency on the library or on Eigen.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

/// Row-major square matrix.
struct Dense {
    std::size_t n = 0;
    std::vector<cplx> a;

    explicit Dense(std::size_t size) : n(size), a(size * size) {}
    cplx &operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    cplx operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Eigenvalues of a real symmetric matrix, ascending.
inline std::vector<double> jacobi_symmetric(std::vector<double> m, std::size_t n) {
    auto at = [&](std::size_t i, std::size_t j) -> double & { return m[i * n + j]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(at(p, q)) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double kp = at(k, p);
                    const double kq = at(k, q);
                    at(k, p) = c * kp - s * kq;
                    at(k, q) = s * kp + c * kq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double pk = at(p, k);
                    const double qk = at(q, k);
                    at(p, k) = c * pk - s * qk;
                    at(q, k) = s * pk + c * qk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

/// Eigenvalues of a Hermitian matrix H = A + iB via the real embedding
/// [[A, -B], [B, A]], whose spectrum is that of H with every value doubled.
inline std::vector<double> jacobi_hermitian(const Dense &h) {
    const std::size_t n = h.n;
    std::vector<double> m(4 * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double re = h(i, j).real();
            const double im = h(i, j).imag();
            m[i * 2 * n + j] = re;
            m[i * 2 * n + j + n] = -im;
            m[(i + n) * 2 * n + j] = im;
            m[(i + n) * 2 * n + j + n] = re;
        }
    }
    const auto doubled = jacobi_symmetric(std::move(m), 2 * n);
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    return ev;
}

/// |phase>^{⊗n} on the occupation basis, binomials by Pascal's triangle.
inline std::vector<cplx> phase_vector(int n, double phase) {
    std::vector<double> row{1.0};
    for (int r = 1; r <= n; ++r) {
        std::vector<double> next(r + 1, 1.0);
        for (int k = 1; k < r; ++k) next[k] = row[k - 1] + row[k];
        row = std::move(next);
    }
    std::vector<cplx> v(n + 1);
    for (int k = 0; k <= n; ++k) v[k] = std::polar(std::sqrt(row[k] / std::pow(2.0, n)), k * phase);
    return v;
}

/// (1/P) sum_j |f_j><f_j|^{⊗n} (1 + cos(f_j - g))/2 on a uniform grid of
/// P points: exact for the degree-(n+1) trigonometric integrand once P > n+1.
inline Dense score_operator_by_sum(int n, double g, int points = 256) {
    Dense w(n + 1);
    for (int j = 0; j < points; ++j) {
        const double f = 2.0 * M_PI * j / points;
        const auto v = phase_vector(n, f);
        const double weight = 0.5 * (1.0 + std::cos(f - g)) / points;
        for (int a = 0; a <= n; ++a)
            for (int b = 0; b <= n; ++b) w(a, b) += weight * v[a] * std::conj(v[b]);
    }
    return w;
}

/// R_N as half the positive spectrum of W(0) - W(π), everything rebuilt
/// from the defining integral.
inline double r_n_brute_force(int n) {
    Dense a = score_operator_by_sum(n, 0.0);
    const Dense b = score_operator_by_sum(n, M_PI);
    for (std::size_t i = 0; i < a.a.size(); ++i) a.a[i] -= b.a[i];
    double sum = 0.0;
    for (double lambda : jacobi_hermitian(a))
        if (lambda > 0.0) sum += lambda;
    return 0.5 * sum;
}

} // namespace oracle
