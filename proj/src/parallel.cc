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

#include "metricdim/parallel.h"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace metricdim {

int DefaultJobs() {
  if (const char* env = std::getenv("METRICDIM_JOBS")) {
    try {
      const int jobs = std::stoi(env);
      if (jobs >= 1) return jobs;
    } catch (const std::exception&) {
      // Fall through to the hardware default.
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void ParallelRanges(
    std::uint64_t total, int jobs,
    const std::function<void(int, std::uint64_t, std::uint64_t)>& work) {
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    work(0, 0, total);
    return;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    const std::uint64_t uw = static_cast<std::uint64_t>(w);
    const std::uint64_t rem = total % jobs;
    const std::uint64_t begin = total / jobs * uw + std::min(uw, rem);
    const std::uint64_t end = begin + total / jobs + (uw < rem ? 1 : 0);
    threads.emplace_back([&, w, begin, end] {
      try {
        work(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace metricdim
