// fdlp/signal.hpp
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

#ifndef FDLP_SIGNAL_HPP
#define FDLP_SIGNAL_HPP

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "fdlp/common.hpp"

namespace fdlp {

struct Signal {
  std::vector<double> samples;  // full-scale +-1
  int sample_rate = 16000;

  double duration() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

inline void validate_signal(const Signal& s) {
  require(s.sample_rate > 0, "sample_rate must be positive");
  for (double v : s.samples)
    if (!std::isfinite(v)) throw ValidationError("non-finite sample");
}

inline double mean_energy(std::span<const double> x) {
  if (x.empty()) return 0.0;
  double e = 0.0;
  for (double v : x) e += v * v;
  return e / static_cast<double>(x.size());
}

// One segment cut from a longer signal; padded_samples counts trailing
// zeros appended to fill the last partial segment.
struct Segment {
  Signal signal;
  int index = 0;
  int padded_samples = 0;
};

// Non-overlapping segmentation with zero padding of the final partial
// segment. A signal shorter than one segment yields a single padded segment.
inline std::vector<Segment> split_segments(const Signal& s, double seconds) {
  require(seconds > 0, "segment length must be positive");
  require(!s.samples.empty(), "empty input");
  const std::size_t seg_len =
      static_cast<std::size_t>(std::llround(seconds * s.sample_rate));
  const std::size_t n = s.samples.size();
  const std::size_t count = (n + seg_len - 1) / seg_len;
  std::vector<Segment> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Segment seg;
    seg.index = static_cast<int>(i);
    seg.signal.sample_rate = s.sample_rate;
    seg.signal.samples.assign(seg_len, 0.0);
    const std::size_t begin = i * seg_len;
    const std::size_t avail = std::min(seg_len, n - begin);
    for (std::size_t k = 0; k < avail; ++k)
      seg.signal.samples[k] = s.samples[begin + k];
    seg.padded_samples = static_cast<int>(seg_len - avail);
    out.push_back(std::move(seg));
  }
  return out;
}

}  // namespace fdlp

#endif  // FDLP_SIGNAL_HPP
