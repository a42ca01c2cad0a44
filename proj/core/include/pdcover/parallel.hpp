// Copyright 2026 The pdcover Authors
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

#ifndef PDCOVER_PARALLEL_HPP_
#define PDCOVER_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace pdcover {

// Splits [0, n) into contiguous chunks and runs fn(begin, end) on up to
// `workers` threads. Callers must write only to slots owned by their indices;
// under that rule the result does not depend on the worker count.
template <class Fn>
void ParallelFor(std::size_t n, unsigned workers, Fn&& fn) {
  constexpr std::size_t kMinChunk = 2048;
  const std::size_t chunks =
      std::min<std::size_t>(std::max(1u, workers), (n + kMinChunk - 1) / kMinChunk);
  if (chunks <= 1) {
    fn(std::size_t{0}, n);
    return;
  }
  const std::size_t step = (n + chunks - 1) / chunks;
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> threads;
    threads.reserve(chunks - 1);
    for (std::size_t c = 1; c < chunks; ++c) {
      const std::size_t begin = c * step;
      const std::size_t end = std::min(n, begin + step);
      if (begin >= end) break;
      threads.emplace_back([&fn, &errors, c, begin, end] {
        try {
          fn(begin, end);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
    try {
      fn(std::size_t{0}, std::min(n, step));
    } catch (...) {
      errors[0] = std::current_exception();
    }
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

}  // namespace pdcover

#endif  // PDCOVER_PARALLEL_HPP_
