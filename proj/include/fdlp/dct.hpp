// fdlp/dct.hpp
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

#ifndef FDLP_DCT_HPP
#define FDLP_DCT_HPP

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "fdlp/fft.hpp"

namespace fdlp {

// Orthonormal type-II DCT via a single same-length FFT (even/odd
// interleaving). idct() is its exact inverse.
inline std::vector<double> dct(std::span<const double> x) {
  require(!x.empty(), "empty input");
  const std::size_t n = x.size();
  if (n == 1) return {x[0]};

  std::vector<cplx> v(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) v[i] = x[2 * i];
  for (std::size_t i = 0; i < n / 2; ++i) v[n - 1 - i] = x[2 * i + 1];
  v = fft(std::move(v));

  const double s0 = std::sqrt(1.0 / static_cast<double>(n));
  const double s = std::sqrt(2.0 / static_cast<double>(n));
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double ang =
        -std::numbers::pi * static_cast<double>(k) / (2.0 * static_cast<double>(n));
    const double re =
        v[k].real() * std::cos(ang) - v[k].imag() * std::sin(ang);
    out[k] = re * (k == 0 ? s0 : s);
  }
  return out;
}

inline std::vector<double> idct(std::span<const double> c) {
  require(!c.empty(), "empty input");
  const std::size_t n = c.size();
  if (n == 1) return {c[0]};

  // Undo the orthonormal scaling back to the raw cosine-sum coefficients,
  // then invert the interleaved FFT.
  const double s0 = std::sqrt(1.0 / static_cast<double>(n));
  const double s = std::sqrt(2.0 / static_cast<double>(n));
  std::vector<double> raw(n);
  for (std::size_t k = 0; k < n; ++k) raw[k] = 2.0 * c[k] / (k == 0 ? s0 : s);

  std::vector<cplx> v(n);
  v[0] = cplx(raw[0] / 2.0, 0.0);
  for (std::size_t k = 1; k < n; ++k) {
    const double ang =
        std::numbers::pi * static_cast<double>(k) / (2.0 * static_cast<double>(n));
    v[k] = cplx(std::cos(ang), std::sin(ang)) * cplx(raw[k] / 2.0, -raw[n - k] / 2.0);
  }
  v = ifft(std::move(v));

  std::vector<double> out(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) out[2 * i] = v[i].real();
  for (std::size_t i = 0; i < n / 2; ++i) out[2 * i + 1] = v[n - 1 - i].real();
  return out;
}

}  // namespace fdlp

#endif  // FDLP_DCT_HPP
