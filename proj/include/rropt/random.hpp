// Copyright 2026 The RROpt Authors
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

#ifndef RROPT_RANDOM_HPP_
#define RROPT_RANDOM_HPP_

#include <cstdint>

namespace rropt {

// Stream tags for the per-respondent sub-streams. Every respondent draws
// one uniform for their truthful bit and one per mechanism for the
// randomisation coin, so mechanisms compared side by side share the same
// truthful population.
inline constexpr std::uint64_t kTruthStream = 0;
inline constexpr std::uint64_t kCoinStreamBase = 1;

inline constexpr std::uint64_t coin_stream(std::uint64_t mechanism_index) {
  return kCoinStreamBase + mechanism_index;
}

// 64-bit finaliser (the murmur3/splitmix mixing function).
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 33;
  z *= 0xff51afd7ed558ccdULL;
  z ^= z >> 33;
  z *= 0xc4ceb9fe1a85ec53ULL;
  z ^= z >> 33;
  return z;
}

// Counter-based generator: a pure hash of (seed, trial, respondent,
// stream). Draws are independent of evaluation order, which makes
// parallel simulation schedules bit-identical to sequential ones.
inline constexpr std::uint64_t key_hash(std::uint64_t seed,
                                        std::uint64_t trial,
                                        std::uint64_t respondent,
                                        std::uint64_t stream) {
  constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  std::uint64_t h = mix64(seed + kGamma);
  h = mix64(h ^ (trial + kGamma));
  h = mix64(h ^ (respondent + kGamma));
  h = mix64(h ^ (stream + kGamma));
  return h;
}

// Uniform double in [0, 1) with 53 random bits.
inline constexpr double to_unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline constexpr double unit_draw(std::uint64_t seed, std::uint64_t trial,
                                  std::uint64_t respondent,
                                  std::uint64_t stream) {
  return to_unit(key_hash(seed, trial, respondent, stream));
}

// Sequential view over one (seed, trial, stream) lane; each call consumes
// the next respondent index.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t trial = 0,
                      std::uint64_t stream = kCoinStreamBase)
      : seed_(seed), trial_(trial), stream_(stream) {}

  double next_unit() { return unit_draw(seed_, trial_, counter_++, stream_); }

 private:
  std::uint64_t seed_;
  std::uint64_t trial_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace rropt

#endif  // RROPT_RANDOM_HPP_
