// fdlp/wav.hpp
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

#ifndef FDLP_WAV_HPP
#define FDLP_WAV_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "fdlp/signal.hpp"

namespace fdlp {

namespace detail {

inline std::uint32_t read_u32le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

inline std::uint16_t read_u16le(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

inline void put_u32le(std::string& s, std::uint32_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
  s.push_back(static_cast<char>((v >> 16) & 0xff));
  s.push_back(static_cast<char>((v >> 24) & 0xff));
}

inline void put_u16le(std::string& s, std::uint16_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
}

}  // namespace detail

// Mono 16-bit PCM reader. expected_rate > 0 rejects other sample rates;
// pass 0 to accept any. Every rejection names the offending field.
inline Signal read_wav(const std::string& path, int expected_rate = 16000) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open WAV file: " + path);
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (buf.size() < 44) throw IoError("WAV file too short: " + path);
  if (std::memcmp(buf.data(), "RIFF", 4) != 0 ||
      std::memcmp(buf.data() + 8, "WAVE", 4) != 0)
    throw IoError("not a RIFF/WAVE file: " + path);

  bool have_fmt = false;
  std::uint16_t format_tag = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  std::size_t data_off = 0, data_len = 0;

  std::size_t pos = 12;
  while (pos + 8 <= buf.size()) {
    const char* id = reinterpret_cast<const char*>(buf.data() + pos);
    std::uint32_t len = detail::read_u32le(buf.data() + pos + 4);
    std::size_t body = pos + 8;
    if (body + len > buf.size()) len = static_cast<std::uint32_t>(buf.size() - body);
    if (std::memcmp(id, "fmt ", 4) == 0 && len >= 16) {
      format_tag = detail::read_u16le(buf.data() + body);
      channels = detail::read_u16le(buf.data() + body + 2);
      rate = detail::read_u32le(buf.data() + body + 4);
      bits = detail::read_u16le(buf.data() + body + 14);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      data_off = body;
      data_len = len;
    }
    pos = body + len + (len & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data_off == 0)
    throw IoError("missing fmt/data chunk: " + path);
  if (format_tag != 1)
    throw ValidationError("unsupported WAV format_tag " +
                          std::to_string(format_tag) + " (need PCM=1): " + path);
  if (channels != 1)
    throw ValidationError("unsupported WAV channels " + std::to_string(channels) +
                          " (need mono=1): " + path);
  if (bits != 16)
    throw ValidationError("unsupported WAV bits_per_sample " +
                          std::to_string(bits) + " (need 16): " + path);
  if (expected_rate > 0 && rate != static_cast<std::uint32_t>(expected_rate))
    throw ValidationError("unsupported WAV sample_rate " + std::to_string(rate) +
                          " (need " + std::to_string(expected_rate) + "): " + path);

  Signal s;
  s.sample_rate = static_cast<int>(rate);
  const std::size_t n = data_len / 2;
  s.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int16_t v = static_cast<std::int16_t>(
        detail::read_u16le(buf.data() + data_off + 2 * i));
    s.samples[i] = static_cast<double>(v) / 32768.0;
  }
  return s;
}

inline void write_wav(const std::string& path, const Signal& s) {
  validate_signal(s);
  std::string out;
  const std::uint32_t n = static_cast<std::uint32_t>(s.samples.size());
  const std::uint32_t data_bytes = n * 2;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  detail::put_u32le(out, 36 + data_bytes);
  out += "WAVEfmt ";
  detail::put_u32le(out, 16);
  detail::put_u16le(out, 1);  // PCM
  detail::put_u16le(out, 1);  // mono
  detail::put_u32le(out, static_cast<std::uint32_t>(s.sample_rate));
  detail::put_u32le(out, static_cast<std::uint32_t>(s.sample_rate) * 2);
  detail::put_u16le(out, 2);
  detail::put_u16le(out, 16);
  out += "data";
  detail::put_u32le(out, data_bytes);
  for (double v : s.samples) {
    double scaled = std::round(v * 32767.0);
    scaled = std::clamp(scaled, -32768.0, 32767.0);
    detail::put_u16le(out, static_cast<std::uint16_t>(
                               static_cast<std::int16_t>(scaled)));
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for write: " + path);
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("short write: " + path);
}

}  // namespace fdlp

#endif  // FDLP_WAV_HPP
