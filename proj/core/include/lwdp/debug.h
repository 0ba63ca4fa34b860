// Copyright 2026 The lwdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Testing hooks. Nothing here provides privacy; do not include from
// production code paths.

#ifndef LWDP_DEBUG_H_
#define LWDP_DEBUG_H_

#include <cstdint>

#include "lwdp/mechanisms.h"

namespace lwdp::debug {

// A source whose streams make every sampler return exactly zero noise.
RandomSource NoiseDisabledSource(std::uint64_t seed = 0);

}  // namespace lwdp::debug

#endif  // LWDP_DEBUG_H_
