// fdlp/envelope.hpp
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

#ifndef FDLP_ENVELOPE_HPP
#define FDLP_ENVELOPE_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fdlp/dct.hpp"
#include "fdlp/lpc.hpp"
#include "fdlp/matrix.hpp"
#include "fdlp/mel.hpp"
#include "fdlp/signal.hpp"

namespace fdlp {

struct FdlpConfig {
  int sample_rate = 16000;
  double segment_seconds = 2.0;
  int num_bands = 36;
  double f_lo = 200.0;
  double f_hi = 6500.0;
  int ar_order = 160;      // poles per band per 2 s segment
  int env_samples = 800;   // 400 Hz envelope rate over 2 s

  int segment_samples() const {
    return static_cast<int>(std::llround(segment_seconds * sample_rate));
  }
  double envelope_rate() const { return env_samples / segment_seconds; }
};

// Non-negative sub-band temporal envelopes of one segment, env_samples rows
// by num_bands columns. Values are floored at floor_value before any log.
struct SubbandEnvelopeSet {
  Matrix values;
  double envelope_rate = 400.0;
  double segment_seconds = 2.0;
  double floor_value = 0.0;
};

// Envelope floor: tied to the segment's mean energy so silent inputs stay
// finite in the log domain and scaling the input by c scales the floor by
// c^2 like every other envelope value.
inline double envelope_floor(double segment_mean_energy) {
  return 1e-10 * (segment_mean_energy + 1e-20);
}

// Squared magnitude of the analytic signal (one-sided spectrum method).
inline std::vector<double> hilbert_envelope(std::span<const double> x) {
  require(!x.empty(), "empty input");
  const std::size_t n = x.size();
  if (n == 1) return {x[0] * x[0]};
  std::vector<cplx> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = x[i];
  f = fft(std::move(f));
  // Keep DC (and Nyquist when even), double positive freqs, zero the rest.
  for (std::size_t k = 1; k < (n + 1) / 2; ++k) f[k] *= 2.0;
  for (std::size_t k = n / 2 + 1; k < n; ++k) f[k] = cplx(0.0, 0.0);
  f = ifft(std::move(f));
  std::vector<double> env(n);
  for (std::size_t i = 0; i < n; ++i) env[i] = std::norm(f[i]);
  return env;
}

inline Signal hilbert_envelope_signal(const Signal& s) {
  Signal out;
  out.sample_rate = s.sample_rate;
  out.samples = hilbert_envelope(s.samples);
  return out;
}

// FDLP analysis of one segment: DCT, per-band mel windowing,
// autocorrelation, Levinson-Durbin, AR power response. Zero-energy bands
// get the floor envelope instead of an error.
inline SubbandEnvelopeSet fdlp_analyze(const Signal& signal,
                                       const FdlpConfig& cfg = {},
                                       bool pad_short = false) {
  validate_signal(signal);
  require(signal.sample_rate == cfg.sample_rate,
          "sample rate does not match analysis config");
  const int want = cfg.segment_samples();
  Signal seg = signal;
  if (static_cast<int>(seg.samples.size()) != want) {
    if (pad_short && static_cast<int>(seg.samples.size()) < want) {
      seg.samples.resize(want, 0.0);
    } else {
      throw ValidationError(
          "segment length " + std::to_string(signal.samples.size()) +
          " does not match expected " + std::to_string(want) + " samples");
    }
  }

  const double floor_val = envelope_floor(mean_energy(seg.samples));
  const std::vector<double> coeffs = dct(seg.samples);
  const MelWindowBank bank = make_mel_windows(cfg.num_bands, cfg.f_lo,
                                              cfg.f_hi, cfg.sample_rate, want);

  SubbandEnvelopeSet out;
  out.values = Matrix(cfg.env_samples, cfg.num_bands);
  out.envelope_rate = cfg.envelope_rate();
  out.segment_seconds = cfg.segment_seconds;
  out.floor_value = floor_val;

  for (int b = 0; b < cfg.num_bands; ++b) {
    try {
      const std::vector<double> w = subband_slice(coeffs, bank, b);
      const int order =
          std::min<int>(cfg.ar_order, static_cast<int>(w.size()) - 1);
      const std::vector<double> r = autocorrelation(w, order);
      if (!(r[0] > 1e-280)) {  // silent band: substitute the floor envelope
        for (int t = 0; t < cfg.env_samples; ++t) out.values(t, b) = floor_val;
        continue;
      }
      const ARModel model = levinson_durbin(r, order);
      const std::vector<double> env = ar_envelope(model, cfg.env_samples);
      for (int t = 0; t < cfg.env_samples; ++t)
        out.values(t, b) = std::max(env[t], floor_val);
    } catch (const Error& e) {
      throw NumericalError("band " + std::to_string(b) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace fdlp

#endif  // FDLP_ENVELOPE_HPP
