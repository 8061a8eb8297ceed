#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace polyadic::detail {

inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return jobs;
}

// Splits [0, count) into contiguous chunks, one per worker, and calls
// body(chunk_index, begin, end). Chunk i covers lower indices than chunk
// i+1, so callers can merge per-chunk results in order for determinism.
template <class Body>
unsigned parallel_chunks(std::uint64_t count, unsigned jobs, Body&& body) {
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(resolve_jobs(jobs), std::max<std::uint64_t>(count, 1)));
  const std::uint64_t step = (count + jobs - 1) / jobs;
  if (jobs == 1) {
    body(0u, std::uint64_t{0}, count);
    return 1;
  }
  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    std::uint64_t begin = std::min(count, w * step), end = std::min(count, begin + step);
    workers.emplace_back([&body, w, begin, end] { body(w, begin, end); });
  }
  return jobs;
}

}  // namespace polyadic::detail
