// Copyright 2026 The Menger Knots Authors.
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

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "menger/summation.hpp"

namespace menger {

/// Worker count used when a call does not specify one. Initialized from the
/// MENGER_WORKERS environment variable, else the hardware concurrency.
int default_workers();
void set_default_workers(int workers);

/// Resolves a requested worker count; values <= 0 mean "use the default".
int resolve_workers(int requested);

/// Calls task(b) for every b in [0, num_blocks) on up to `workers` threads.
/// Blocks are handed out dynamically, so tasks must only write to storage
/// owned by their block. The first exception thrown by a task is rethrown.
void for_each_block(std::size_t num_blocks, int workers,
                    const std::function<void(std::size_t)>& task);

/// Compensated sum over outer indices [0, count), partitioned into fixed
/// blocks of `block_size` indices. `body(i, acc)` adds the terms owned by
/// outer index i. Partial sums are merged in block order, so the result is
/// bit-identical for every worker count.
template <typename Body>
double blocked_sum(std::size_t count, std::size_t block_size, int workers,
                   Body&& body) {
  const std::size_t num_blocks = (count + block_size - 1) / block_size;
  std::vector<NeumaierSum> partials(num_blocks);
  for_each_block(num_blocks, workers, [&](std::size_t b) {
    NeumaierSum acc;
    const std::size_t end = std::min(count, (b + 1) * block_size);
    for (std::size_t i = b * block_size; i < end; ++i) body(i, acc);
    partials[b] = acc;
  });
  NeumaierSum total;
  for (const NeumaierSum& p : partials) total.merge(p);
  return total.value();
}

}  // namespace menger
