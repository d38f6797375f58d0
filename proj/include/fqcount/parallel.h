// Copyright 2026 The fqcount Authors
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

// Range-partitioned parallel evaluation. Results are returned per range in
// range order, so any merge by addition is independent of the worker count.

#ifndef FQCOUNT_PARALLEL_H_
#define FQCOUNT_PARALLEL_H_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace fqcount {

// 0 selects the hardware concurrency.
inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Calls fn(lo, hi) on contiguous ranges covering [0, total).
template <class Fn>
auto map_ranges(std::uint64_t total, unsigned workers, Fn fn)
    -> std::vector<std::invoke_result_t<Fn, std::uint64_t, std::uint64_t>> {
  using Result = std::invoke_result_t<Fn, std::uint64_t, std::uint64_t>;
  const std::uint64_t parts =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_workers(workers), total));
  std::vector<Result> results(parts);
  auto bounds = [&](std::uint64_t i) { return total * i / parts; };
  if (parts == 1) {
    results[0] = fn(0, total);
    return results;
  }
  std::vector<std::exception_ptr> errors(parts);
  std::vector<std::thread> threads;
  threads.reserve(parts);
  for (std::uint64_t i = 0; i < parts; ++i) {
    threads.emplace_back([&, i] {
      try {
        results[i] = fn(bounds(i), bounds(i + 1));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace fqcount

#endif  // FQCOUNT_PARALLEL_H_
