// fdlp/reverb.hpp
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

#ifndef FDLP_REVERB_HPP
#define FDLP_REVERB_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fdlp/fft.hpp"
#include "fdlp/rng.hpp"
#include "fdlp/signal.hpp"

namespace fdlp {

struct RoomImpulseResponse {
  std::vector<double> samples;  // unit total energy
  int sample_rate = 16000;
  double t60 = 0.0;             // seconds
  int direct_index = 0;
  double split_ms = 50.0;       // early/late boundary
};

// Exponentially decaying Gaussian noise plus a unit direct-path impulse,
// normalized to unit energy. The -3n/(fs*t60) exponent makes the energy
// decay hit -60 dB exactly at t60.
inline RoomImpulseResponse synth_rir(double t60, int sample_rate,
                                     double duration, std::uint64_t seed) {
  require(sample_rate > 0, "sample_rate must be positive");
  require(t60 > 0.0, "t60 must be positive");
  require(duration <= 2.0, "RIR duration must be <= 2 s");
  if (t60 > duration) throw ValidationError("decay exceeds RIR length");

  const int n = static_cast<int>(std::llround(duration * sample_rate));
  require(n >= 1, "RIR must contain at least one sample");

  RoomImpulseResponse h;
  h.sample_rate = sample_rate;
  h.t60 = t60;
  h.direct_index = 0;
  Rng rng(seed);
  h.samples.resize(n);
  for (int i = 0; i < n; ++i) {
    const double decay =
        std::pow(10.0, -3.0 * i / (sample_rate * t60));
    h.samples[i] = rng.normal() * decay;
  }
  h.samples[0] += 1.0;

  double energy = 0.0;
  for (double v : h.samples) energy += v * v;
  const double scale = 1.0 / std::sqrt(energy);
  for (double& v : h.samples) v *= scale;
  return h;
}

// Full linear convolution truncated to the input length, so clean and
// reverberant streams stay segment-aligned.
inline Signal convolve(const Signal& x, const RoomImpulseResponse& h) {
  require(!x.samples.empty() && !h.samples.empty(), "empty input");
  if (x.sample_rate != h.sample_rate)
    throw ValidationError("sample rate mismatch: " +
                          std::to_string(x.sample_rate) + " vs " +
                          std::to_string(h.sample_rate));
  std::vector<double> full = fft_convolve(x.samples, h.samples);
  Signal out;
  out.sample_rate = x.sample_rate;
  out.samples.assign(full.begin(),
                     full.begin() + static_cast<std::ptrdiff_t>(x.samples.size()));
  return out;
}

// Exact partition at the early/late boundary: h_early + h_late == h.
inline std::pair<RoomImpulseResponse, RoomImpulseResponse> split_rir(
    const RoomImpulseResponse& h) {
  const int boundary = static_cast<int>(
      std::llround(h.split_ms / 1000.0 * h.sample_rate));
  require(boundary >= 0 &&
              boundary <= static_cast<int>(h.samples.size()),
          "split boundary outside RIR");
  RoomImpulseResponse early = h, late = h;
  for (std::size_t i = static_cast<std::size_t>(boundary); i < h.samples.size(); ++i)
    early.samples[i] = 0.0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(boundary); ++i)
    late.samples[i] = 0.0;
  return {std::move(early), std::move(late)};
}

// Additive white Gaussian noise at an exact SNR. snr_db = +infinity is the
// no-noise sentinel.
inline Signal add_noise(const Signal& r, double snr_db, std::uint64_t seed) {
  require(!r.samples.empty(), "empty input");
  if (std::isinf(snr_db) && snr_db > 0) return r;
  require(std::isfinite(snr_db), "snr_db must be finite or +inf");

  double sig_energy = 0.0;
  for (double v : r.samples) sig_energy += v * v;
  if (sig_energy <= 0.0) throw ValidationError("undefined SNR");

  Rng rng(seed);
  std::vector<double> noise = rng.normals(r.samples.size());
  double noise_energy = 0.0;
  for (double v : noise) noise_energy += v * v;
  const double target_noise_energy =
      sig_energy / std::pow(10.0, snr_db / 10.0);
  const double scale = std::sqrt(target_noise_energy / noise_energy);

  Signal out = r;
  for (std::size_t i = 0; i < out.samples.size(); ++i)
    out.samples[i] += scale * noise[i];
  return out;
}

// Schroeder backward-integrated energy decay curve in dB (0 dB at t=0).
inline std::vector<double> schroeder_edc_db(std::span<const double> h) {
  require(!h.empty(), "empty input");
  std::vector<double> edc(h.size());
  double acc = 0.0;
  for (std::size_t i = h.size(); i-- > 0;) {
    acc += h[i] * h[i];
    edc[i] = acc;
  }
  const double total = edc[0];
  for (double& v : edc)
    v = 10.0 * std::log10(std::max(v, 1e-300) / total);
  return edc;
}

// T60 from a least-squares slope fit of the decay curve over the
// [-5, -35] dB range, extrapolated to -60 dB.
inline double measure_t60(std::span<const double> h, int sample_rate) {
  require(sample_rate > 0, "sample_rate must be positive");
  const std::vector<double> edc = schroeder_edc_db(h);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < edc.size(); ++i) {
    if (edc[i] > -5.0 || edc[i] < -35.0) continue;
    const double t = static_cast<double>(i) / sample_rate;
    sx += t;
    sy += edc[i];
    sxx += t * t;
    sxy += t * edc[i];
    ++count;
  }
  if (count < 2) throw NumericalError("decay range too short to fit T60");
  const double n = static_cast<double>(count);
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  if (!(slope < 0.0)) throw NumericalError("non-decaying energy curve");
  return -60.0 / slope;
}

}  // namespace fdlp

#endif  // FDLP_REVERB_HPP
