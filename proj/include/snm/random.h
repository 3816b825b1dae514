// Copyright 2026 The SNM Authors
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

#ifndef SNM_RANDOM_H_
#define SNM_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>

namespace snm {

// Seeded random stream. The standard distributions are implementation
// defined, so bounded integers and reals are derived here directly from the
// 64-bit Mersenne Twister output, which is fixed by the standard. Identical
// seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform integer in [0, n). Requires n > 0.
  uint64_t UniformIndex(uint64_t n) {
    // Rejection on the top of the range removes modulo bias.
    const uint64_t limit = UINT64_MAX - (UINT64_MAX % n + 1) % n;
    uint64_t x;
    do {
      x = engine_();
    } while (x > limit);
    return x % n;
  }

  // Uniform integer in [lo, hi]. Requires lo <= hi.
  int64_t UniformInt(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(
                    UniformIndex(static_cast<uint64_t>(hi - lo) + 1));
  }

  // Uniform real in [0, 1) with 53 random bits.
  double UniformReal() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace snm

#endif  // SNM_RANDOM_H_
