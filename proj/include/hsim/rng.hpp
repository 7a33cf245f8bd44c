// Copyright 2026 The hsim developers
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

#pragma once

#include <cstdint>
#include <random>

namespace hsim::rng {

// All seeded randomness in the library flows through std::mt19937_64, whose
// raw output sequence is fully specified by the C++ standard. The mappings
// below deliberately avoid std::uniform_*_distribution (whose results are
// implementation-defined) so that seeded outputs are bit-identical across
// standard libraries and platforms.

// Unbiased integer in [0, k) via rejection sampling. k must be nonzero.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t k) {
  const std::uint64_t bound = k * ((~std::uint64_t{0}) / k);
  std::uint64_t u = gen();
  while (u >= bound) u = gen();
  return u % k;
}

// Double in [-1, 1) with 53-bit resolution: (u >> 11) * 2^-53 in [0,1),
// rescaled. May return exactly 0.0 or -1.0; callers that must exclude a
// value redraw.
inline double uniform_pm1(std::mt19937_64& gen) {
  const double u01 = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return 2.0 * u01 - 1.0;
}

}  // namespace hsim::rng
