// Copyright 2026 The nacost Authors
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

#pragma once

// Brute-force reference computations used to check the library. None of
// these share code paths with the implementation they are compared against.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace nacost::oracle {

/// Eigenvalue (MHz) of [[0, v3], [v3, delta]] whose eigenvector has the
/// largest overlap with the unshifted pair state (1, 0).
inline double pair_shift_by_diagonalization(double v3, double delta) {
  Eigen::Matrix2d h;
  h << 0.0, v3, v3, delta;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(h);
  const auto& vecs = solver.eigenvectors();
  const int pick = std::abs(vecs(0, 0)) >= std::abs(vecs(0, 1)) ? 0 : 1;
  return solver.eigenvalues()(pick);
}

/// Mean of D^e over ordered pairs of distinct sites, by direct enumeration.
inline double manhattan_pairs(int w, int h, double e) {
  double sum = 0.0;
  long long count = 0;
  for (int a = 0; a < w * h; ++a) {
    for (int b = 0; b < w * h; ++b) {
      if (a == b) continue;
      const int d = std::abs(a % w - b % w) + std::abs(a / w - b / w);
      sum += std::pow(static_cast<double>(d), e);
      ++count;
    }
  }
  return sum / static_cast<double>(count);
}

inline double zone_mean(int w, int h, double zx, double zy, double e) {
  double sum = 0.0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) sum += std::pow(std::abs(x - zx) + std::abs(y - zy), e);
  }
  return sum / (w * h);
}

/// Full 2^(N+1) state vector of (c0|0> + c1|1>) (x) |0...0>_N after a CNOT
/// from the ancilla (most significant bit) onto each of the N register qubits.
inline std::vector<std::complex<double>> cnot_fanout_state(std::complex<double> c0, std::complex<double> c1,
                                                           int n) {
  const std::size_t dim = std::size_t{1} << (n + 1);
  std::vector<std::complex<double>> psi(dim, 0.0);
  const std::size_t anc = std::size_t{1} << n;
  psi[0] = c0;
  psi[anc] = c1;
  for (int q = 0; q < n; ++q) {
    const std::size_t target = std::size_t{1} << q;
    std::vector<std::complex<double>> next(psi);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & anc) next[i ^ target] = psi[i];
    }
    psi.swap(next);
  }
  return psi;
}

/// Composite Simpson rule on [a, b] with n (even) intervals.
template <typename F>
double simpson(F f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace nacost::oracle
