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

#include "menger/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace menger {

namespace {

int initial_workers() {
  if (const char* env = std::getenv("MENGER_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w > 0) return w;
    } catch (const std::exception&) {
      // fall through to hardware concurrency
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::atomic<int>& default_slot() {
  static std::atomic<int> workers{initial_workers()};
  return workers;
}

}  // namespace

int default_workers() { return default_slot().load(); }

void set_default_workers(int workers) {
  default_slot().store(std::max(1, workers));
}

int resolve_workers(int requested) {
  return requested > 0 ? requested : default_workers();
}

void for_each_block(std::size_t num_blocks, int workers,
                    const std::function<void(std::size_t)>& task) {
  const std::size_t threads =
      std::min<std::size_t>(num_blocks, static_cast<std::size_t>(resolve_workers(workers)));
  if (threads <= 1) {
    for (std::size_t b = 0; b < num_blocks; ++b) task(b);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= num_blocks) return;
      try {
        task(b);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(num_blocks);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace menger
