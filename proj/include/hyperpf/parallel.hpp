#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hyperpf {

// Splits [0, count) into at most `threads` contiguous chunks and runs
// body(begin, end, chunk) on each, one std::thread per chunk beyond the
// first. Returns the number of chunks used. Exceptions are rethrown on the
// calling thread.
template <class Body>
std::size_t parallel_chunks(std::size_t count, int threads, Body&& body) {
  const std::size_t chunks =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count));
  const std::size_t per = (count + chunks - 1) / std::max<std::size_t>(chunks, 1);
  if (chunks == 1) {
    body(std::size_t{0}, count, std::size_t{0});
    return 1;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> pool;
  pool.reserve(chunks - 1);
  auto run = [&](std::size_t c) {
    try {
      const std::size_t begin = std::min(count, c * per);
      const std::size_t end = std::min(count, begin + per);
      body(begin, end, c);
    } catch (...) {
      errors[c] = std::current_exception();
    }
  };
  for (std::size_t c = 1; c < chunks; ++c) pool.emplace_back(run, c);
  run(0);
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return chunks;
}

}  // namespace hyperpf
