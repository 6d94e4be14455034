// Copyright 2026 The spanopt Authors
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

#ifndef SPANOPT_TOOLS_SUITES_INL_HPP_
#define SPANOPT_TOOLS_SUITES_INL_HPP_

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace spanopt::suites {

template <typename R, typename F>
std::vector<R> ParallelMap(int count, int jobs, F fn) {
  std::vector<R> out(count);
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (int i = next++; i < count; i = next++) out[i] = fn(i);
    });
  }
  for (auto& t : workers) t.join();
  return out;
}

}  // namespace spanopt::suites

#endif  // SPANOPT_TOOLS_SUITES_INL_HPP_
