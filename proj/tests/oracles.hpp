// tests/oracles.hpp
//
// Copyright 2026  FDLP Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Brute-force reference implementations. These stay independent of the
// library's transform-domain fast paths on purpose.

#ifndef FDLP_TESTS_ORACLES_HPP
#define FDLP_TESTS_ORACLES_HPP

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace oracles {

// Textbook O(N^2) orthonormal DCT-II summation.
inline std::vector<double> dct_brute(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      acc += x[i] * std::cos(std::numbers::pi * k * (2.0 * i + 1.0) /
                             (2.0 * n));
    const double s = k == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
    out[k] = acc * s;
  }
  return out;
}

// Direct O(N*M) linear convolution.
inline std::vector<double> convolve_brute(std::span<const double> a,
                                          std::span<const double> b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Direct double-loop biased autocorrelation.
inline std::vector<double> autocorr_brute(std::span<const double> x,
                                          int max_lag) {
  std::vector<double> r(static_cast<std::size_t>(max_lag) + 1, 0.0);
  for (int t = 0; t <= max_lag; ++t)
    for (std::size_t k = 0; k + t < x.size(); ++k) r[t] += x[k] * x[k + t];
  return r;
}

// Gaussian elimination with partial pivoting; returns x solving A x = y.
inline std::vector<double> solve_dense(std::vector<std::vector<double>> a,
                                       std::vector<double> y) {
  const std::size_t n = y.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    std::swap(a[col], a[pivot]);
    std::swap(y[col], y[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      y[r] -= f * y[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t r = n; r-- > 0;) {
    double acc = y[r];
    for (std::size_t c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
    x[r] = acc / a[r][r];
  }
  return x;
}

// Yule-Walker solved densely: predictor coefficients for the Toeplitz
// normal equations built from r[0..order].
inline std::vector<double> ar_coeffs_dense(std::span<const double> r,
                                           int order) {
  std::vector<std::vector<double>> a(order, std::vector<double>(order));
  std::vector<double> y(order);
  for (int i = 0; i < order; ++i) {
    y[i] = -r[i + 1];
    for (int j = 0; j < order; ++j) a[i][j] = r[std::abs(i - j)];
  }
  const std::vector<double> sol = solve_dense(std::move(a), std::move(y));
  std::vector<double> coeffs(static_cast<std::size_t>(order) + 1, 1.0);
  for (int i = 0; i < order; ++i) coeffs[i + 1] = sol[i];
  return coeffs;
}

}  // namespace oracles

#endif  // FDLP_TESTS_ORACLES_HPP
