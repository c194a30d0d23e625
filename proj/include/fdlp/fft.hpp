// fdlp/fft.hpp
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

#ifndef FDLP_FFT_HPP
#define FDLP_FFT_HPP

#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "fdlp/common.hpp"

namespace fdlp {

using cplx = std::complex<double>;

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// In-place iterative radix-2 Cooley-Tukey. Unscaled in both directions.
inline void fft_pow2(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = 2.0 * std::numbers::pi / static_cast<double>(len);
    if (!inverse) ang = -ang;
    const cplx wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        cplx u = a[i + k];
        cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

// Bluestein chirp transform: forward DFT of arbitrary length via a
// power-of-two convolution. k*k is reduced mod 2n in integer arithmetic so
// the chirp phase stays accurate for large n.
inline std::vector<cplx> bluestein_forward(const std::vector<cplx>& a) {
  const std::size_t n = a.size();
  const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n);
  std::vector<cplx> chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t kk = (static_cast<std::uint64_t>(k) * k) % two_n;
    double ang = -std::numbers::pi * static_cast<double>(kk) /
                 static_cast<double>(n);
    chirp[k] = cplx(std::cos(ang), std::sin(ang));
  }
  const std::size_t m = next_pow2(2 * n - 1);
  std::vector<cplx> x(m, cplx(0.0, 0.0)), y(m, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < n; ++k) x[k] = a[k] * chirp[k];
  y[0] = std::conj(chirp[0]);
  for (std::size_t k = 1; k < n; ++k)
    y[k] = y[m - k] = std::conj(chirp[k]);
  fft_pow2(x, false);
  fft_pow2(y, false);
  for (std::size_t i = 0; i < m; ++i) x[i] *= y[i];
  fft_pow2(x, true);
  std::vector<cplx> out(n);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k) out[k] = x[k] * inv_m * chirp[k];
  return out;
}

}  // namespace detail

// DFT of arbitrary length. Unscaled: ifft() applies the 1/n factor.
inline std::vector<cplx> fft(std::vector<cplx> a, bool inverse = false) {
  require(!a.empty(), "empty input");
  if (a.size() == 1) return a;
  if (detail::is_pow2(a.size())) {
    detail::fft_pow2(a, inverse);
    return a;
  }
  if (!inverse) return detail::bluestein_forward(a);
  for (auto& v : a) v = std::conj(v);
  a = detail::bluestein_forward(a);
  for (auto& v : a) v = std::conj(v);
  return a;
}

inline std::vector<cplx> ifft(std::vector<cplx> a) {
  const double inv_n = 1.0 / static_cast<double>(a.size());
  a = fft(std::move(a), true);
  for (auto& v : a) v *= inv_n;
  return a;
}

// Full linear convolution of real sequences, length la + lb - 1.
inline std::vector<double> fft_convolve(std::span<const double> a,
                                        std::span<const double> b) {
  require(!a.empty() && !b.empty(), "empty input");
  const std::size_t out_len = a.size() + b.size() - 1;
  const std::size_t m = detail::next_pow2(out_len);
  std::vector<cplx> fa(m, cplx(0.0, 0.0)), fb(m, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i];
  detail::fft_pow2(fa, false);
  detail::fft_pow2(fb, false);
  for (std::size_t i = 0; i < m; ++i) fa[i] *= fb[i];
  detail::fft_pow2(fa, true);
  std::vector<double> out(out_len);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = fa[i].real() * inv_m;
  return out;
}

}  // namespace fdlp

#endif  // FDLP_FFT_HPP
