// Copyright 2026 The metricdim Authors
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

#ifndef METRICDIM_PARALLEL_H_
#define METRICDIM_PARALLEL_H_

#include <cstdint>
#include <functional>

namespace metricdim {

// Worker count from METRICDIM_JOBS, else the hardware concurrency, at least 1.
int DefaultJobs();

// Splits [0, total) into `jobs` contiguous ranges and runs
// work(worker, begin, end) for each, one thread per range. Worker w always
// receives the w-th range, so callers can merge per-worker results in worker
// order and get output independent of scheduling. Exceptions thrown by a
// worker are rethrown on the calling thread.
void ParallelRanges(
    std::uint64_t total, int jobs,
    const std::function<void(int, std::uint64_t, std::uint64_t)>& work);

}  // namespace metricdim

#endif  // METRICDIM_PARALLEL_H_
