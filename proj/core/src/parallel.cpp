// SPDX-License-Identifier: Apache-2.0

#include "seifertwrt/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace swrt {

int thread_budget() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("SEIFERT_WRT_THREADS")) {
    try {
      int cap = std::stoi(env);
      if (cap >= 1 && cap < hw) hw = cap;
    } catch (...) {
      // Unparseable cap: ignore and use hardware concurrency.
    }
  }
  return hw;
}

void run_chunked(std::size_t n, std::size_t chunk_size,
                 const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  if (chunk_size == 0) chunk_size = 1;
  std::size_t chunks = (n + chunk_size - 1) / chunk_size;
  int threads = thread_budget();
  if (threads == 1 || chunks == 1) {
    for (std::size_t c = 0; c < chunks; ++c)
      fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1))
      fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
  };
  std::vector<std::thread> pool;
  int spawn = std::min<std::size_t>(threads, chunks);
  pool.reserve(static_cast<std::size_t>(spawn) - 1);
  for (int t = 1; t < spawn; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace swrt
