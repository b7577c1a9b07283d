#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace ballerg::detail {

// Runs fn(begin, end) over contiguous chunks of [0, n_items). Results must be
// independent per item (or merged through order-independent reductions such
// as max), so byte-level output does not depend on the thread count.
template <class Fn>
void chunked_for(std::size_t n_items, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n_items < 2) {
    fn(std::size_t{0}, n_items);
    return;
  }
  const std::size_t n_chunks = std::min<std::size_t>(threads, n_items);
  const std::size_t base = n_items / n_chunks;
  const std::size_t rem = n_items % n_chunks;
  std::vector<std::thread> pool;
  pool.reserve(n_chunks);
  std::size_t begin = 0;
  for (std::size_t c = 0; c < n_chunks; ++c) {
    const std::size_t len = base + (c < rem ? 1 : 0);
    pool.emplace_back([&fn, begin, len] { fn(begin, begin + len); });
    begin += len;
  }
  for (auto& t : pool) t.join();
}

}  // namespace ballerg::detail
