/*
   Copyright 2026 The phasetail authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PHASETAIL_KERNELS_PHILOX_HPP
#define PHASETAIL_KERNELS_PHILOX_HPP

#include <array>
#include <cstdint>

namespace phasetail::kernels {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).  A pure
// block function: every 128-bit output is a keyed bijection of its counter,
// so streams can be indexed, split, and evaluated in any order.

struct PhiloxKey {
  std::uint32_t k0 = 0;
  std::uint32_t k1 = 0;
};

inline PhiloxKey philox_key_from_seed(std::uint64_t seed) {
  return {std::uint32_t(seed), std::uint32_t(seed >> 32)};
}

inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               PhiloxKey key) {
  constexpr std::uint32_t kMul0 = 0xD2511F53u;
  constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t(kMul0) * ctr[0];
    const std::uint64_t p1 = std::uint64_t(kMul1) * ctr[2];
    const std::uint32_t lo0 = std::uint32_t(p0);
    const std::uint32_t hi0 = std::uint32_t(p0 >> 32);
    const std::uint32_t lo1 = std::uint32_t(p1);
    const std::uint32_t hi1 = std::uint32_t(p1 >> 32);
    ctr = {hi1 ^ ctr[1] ^ key.k0, lo1, hi0 ^ ctr[3] ^ key.k1, lo0};
    key.k0 += kWeyl0;
    key.k1 += kWeyl1;
  }
  return ctr;
}

// Counter layout used by the sampling kernels: words 0-1 hold the 64-bit
// particle index, words 2-3 the stream id.
inline std::array<std::uint32_t, 4> philox_counter(std::uint64_t index,
                                                   std::uint64_t stream = 0) {
  return {std::uint32_t(index), std::uint32_t(index >> 32),
          std::uint32_t(stream), std::uint32_t(stream >> 32)};
}

}  // namespace phasetail::kernels

#endif
