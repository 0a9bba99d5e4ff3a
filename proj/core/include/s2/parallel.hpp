// Copyright 2026 The s2oiqa Authors.
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

#ifndef S2_PARALLEL_HPP_
#define S2_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace s2 {

// Name of the environment variable that overrides worker_count().
inline constexpr const char* kThreadsEnv = "S2_THREADS";

// S2_THREADS if set to a positive integer, else hardware concurrency.
std::size_t worker_count();

// Runs body(i) for i in [0, n). Each index runs exactly once; callers write
// results into per-index slots so output never depends on scheduling. The
// first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace s2

#endif  // S2_PARALLEL_HPP_
