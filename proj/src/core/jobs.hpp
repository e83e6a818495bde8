// jobs.hpp -- deterministic fork/join helper
#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace moddiag {

/// Worker count: explicit override (>0) wins, otherwise the MODDIAG_JOBS
/// environment variable, otherwise 1.
inline int job_count(int override_jobs = 0) {
  int n = override_jobs;
  if (n <= 0) {
    if (const char* env = std::getenv("MODDIAG_JOBS")) n = std::atoi(env);
  }
  if (n < 1) n = 1;
  if (n > 64) n = 64;
  return n;
}

/// Runs fn(0..count-1) across `jobs` workers and collects results in index
/// order, so the output is identical no matter how many workers run.
template <typename T, typename Fn>
std::vector<T> ordered_parallel(int count, int jobs, Fn fn) {
  std::vector<T> out(static_cast<size_t>(count > 0 ? count : 0));
  if (count <= 0) return out;
  jobs = std::min(jobs, count);
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<int> cursor{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    while (true) {
      int i = cursor.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(error);
  return out;
}

}  // namespace moddiag
