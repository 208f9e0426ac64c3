// Copyright 2026 The uavnoma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UAVNOMA_RNG_HPP
#define UAVNOMA_RNG_HPP

#include <cstdint>
#include <random>

namespace uavnoma {

// Random stream "uavnoma-rng-v1":
//   engine     std::mt19937_64 (output sequence fixed by the C++ standard)
//   uniform01  top 53 bits of one engine draw, scaled by 2^-53, in [0, 1)
//   substreams seeded with splitmix64(base ^ splitmix64(stream_id))
//
// The std::*_distribution templates are deliberately avoided: their output is
// implementation-defined and differs between standard libraries.
class Rng {
public:
  static constexpr const char* kAlgorithm = "uavnoma-rng-v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
  std::mt19937_64 engine_;
};

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Independent, reproducible substream of `base` identified by `stream_id`.
inline Rng substream(std::uint64_t base, std::uint64_t stream_id) {
  return Rng(splitmix64(base ^ splitmix64(stream_id)));
}

/// Well-known substream ids.
enum class Stream : std::uint64_t {
  devices = 1,
  su_placement = 2,
};

inline Rng substream(std::uint64_t base, Stream s) {
  return substream(base, static_cast<std::uint64_t>(s));
}

}  // namespace uavnoma

#endif  // UAVNOMA_RNG_HPP
