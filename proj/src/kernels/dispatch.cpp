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

#include <cstdlib>
#include <cstring>

#include "phasetail/kernels/sample_kernels.hpp"

namespace phasetail::kernels {

namespace {

const Ops& pick_backend() {
  const char* pref = std::getenv("PHASETAIL_KERNELS");
  if (pref != nullptr && std::strcmp(pref, "scalar") == 0) return scalar_ops();
  const Ops* simd = avx2_ops();
  if (pref != nullptr && std::strcmp(pref, "avx2") == 0 && simd == nullptr)
    return scalar_ops();  // requested but unavailable; outputs match anyway
  return simd != nullptr ? *simd : scalar_ops();
}

}  // namespace

const Ops& active_ops() {
  static const Ops& ops = pick_backend();
  return ops;
}

}  // namespace phasetail::kernels
