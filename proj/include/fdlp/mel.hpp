// fdlp/mel.hpp
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

#ifndef FDLP_MEL_HPP
#define FDLP_MEL_HPP

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "fdlp/common.hpp"

namespace fdlp {

inline double hz_to_mel(double f) {
  return 2595.0 * std::log10(1.0 + f / 700.0);
}

inline double mel_to_hz(double m) {
  return 700.0 * (std::pow(10.0, m / 2595.0) - 1.0);
}

struct MelBand {
  int start = 0;                 // first grid index of the support
  std::vector<double> weights;   // contiguous, strictly positive
  double center_hz = 0.0;
};

// Sine-tapered bands with 50% overlap, centers equally spaced on the mel
// scale (inclusive of both range edges). Adjacent rising/falling halves are
// sin/cos of the same argument, so the squared windows sum to one across
// the covered range.
struct MelWindowBank {
  int num_bands = 0;
  double f_lo = 0.0, f_hi = 0.0;
  double sample_rate = 0.0;
  int grid_len = 0;          // number of coefficient/bin indices
  double hz_per_bin = 0.0;
  std::vector<MelBand> bands;
};

namespace detail {

// Window value of band b at mel coordinate m, given the band centers.
inline double mel_window_value(const std::vector<double>& centers, int b,
                               double m) {
  const int last = static_cast<int>(centers.size()) - 1;
  const double c = centers[b];
  if (m < c) {
    if (b == 0) return 0.0;
    const double left = centers[b - 1];
    if (m <= left) return 0.0;
    return std::sin(0.5 * std::numbers::pi * (m - left) / (c - left));
  }
  if (b == last) return m == c ? 1.0 : 0.0;
  const double right = centers[b + 1];
  if (m >= right) return 0.0;
  return std::cos(0.5 * std::numbers::pi * (m - c) / (right - c));
}

}  // namespace detail

inline MelWindowBank make_mel_bank_on_grid(int num_bands, double f_lo,
                                           double f_hi, double sample_rate,
                                           int grid_len, double hz_per_bin) {
  require(num_bands >= 1, "num_bands must be >= 1");
  require(f_lo > 0.0 && f_lo < f_hi, "need 0 < f_lo < f_hi");
  if (f_hi > sample_rate / 2.0)
    throw ValidationError("band edge above Nyquist");
  require(grid_len >= 1 && hz_per_bin > 0.0, "invalid frequency grid");

  const double m_lo = hz_to_mel(f_lo), m_hi = hz_to_mel(f_hi);
  std::vector<double> centers(num_bands);
  if (num_bands == 1) {
    centers[0] = 0.5 * (m_lo + m_hi);
  } else {
    for (int b = 0; b < num_bands; ++b)
      centers[b] = m_lo + (m_hi - m_lo) * b / (num_bands - 1);
  }

  // For a single band the taper rises to the midpoint and falls to f_hi;
  // reuse the generic window with virtual edge centers.
  std::vector<double> eval_centers = centers;
  int eval_band = 0;
  if (num_bands == 1) {
    eval_centers = {m_lo, centers[0], m_hi};
    eval_band = 1;
  }

  MelWindowBank bank;
  bank.num_bands = num_bands;
  bank.f_lo = f_lo;
  bank.f_hi = f_hi;
  bank.sample_rate = sample_rate;
  bank.grid_len = grid_len;
  bank.hz_per_bin = hz_per_bin;
  bank.bands.resize(num_bands);

  for (int b = 0; b < num_bands; ++b) {
    MelBand& band = bank.bands[b];
    band.center_hz = mel_to_hz(centers[b]);
    int first = -1;
    std::vector<double> w;
    for (int k = 0; k < grid_len; ++k) {
      const double f = k * hz_per_bin;
      if (f < f_lo || f > f_hi) continue;
      const double v = detail::mel_window_value(
          eval_centers, num_bands == 1 ? eval_band : b, hz_to_mel(f));
      if (v > 0.0) {
        if (first < 0) first = k;
        w.resize(static_cast<std::size_t>(k - first) + 1, 0.0);
        w.back() = v;
      }
    }
    if (first < 0)
      throw ValidationError("band " + std::to_string(b) +
                            " has empty support (grid too coarse)");
    band.start = first;
    band.weights = std::move(w);
  }
  return bank;
}

// Bank over DCT coefficient indices of a dct_len-point transform of a
// sample_rate signal: coefficient k sits at k*sample_rate/(2*dct_len) Hz.
inline MelWindowBank make_mel_windows(int num_bands, double f_lo, double f_hi,
                                      double sample_rate, int dct_len) {
  require(dct_len >= 1, "dct_len must be >= 1");
  return make_mel_bank_on_grid(num_bands, f_lo, f_hi, sample_rate, dct_len,
                               sample_rate / (2.0 * dct_len));
}

// Windowed coefficients for one band: elementwise product over the band
// support, zero elsewhere. Full-length output.
inline std::vector<double> subband_coeffs(std::span<const double> coeffs,
                                          const MelWindowBank& bank,
                                          int band) {
  if (band < 0 || band >= bank.num_bands)
    throw ValidationError("band index out of range: " + std::to_string(band));
  require(static_cast<int>(coeffs.size()) == bank.grid_len,
          "coefficient length does not match bank grid");
  std::vector<double> out(coeffs.size(), 0.0);
  const MelBand& mb = bank.bands[band];
  for (std::size_t i = 0; i < mb.weights.size(); ++i)
    out[mb.start + i] = coeffs[mb.start + i] * mb.weights[i];
  return out;
}

// Compact windowed slice (support only); autocorrelation is shift-invariant
// so the analysis path works on this directly.
inline std::vector<double> subband_slice(std::span<const double> coeffs,
                                         const MelWindowBank& bank, int band) {
  if (band < 0 || band >= bank.num_bands)
    throw ValidationError("band index out of range: " + std::to_string(band));
  require(static_cast<int>(coeffs.size()) == bank.grid_len,
          "coefficient length does not match bank grid");
  const MelBand& mb = bank.bands[band];
  std::vector<double> out(mb.weights.size());
  for (std::size_t i = 0; i < mb.weights.size(); ++i)
    out[i] = coeffs[mb.start + i] * mb.weights[i];
  return out;
}

}  // namespace fdlp

#endif  // FDLP_MEL_HPP
