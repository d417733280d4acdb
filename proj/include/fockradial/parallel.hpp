#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace fockradial {

/// Worker count: hardware concurrency, capped by FOCK_RADIAL_THREADS when set.
inline std::size_t worker_count()
{
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FOCK_RADIAL_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min<std::size_t>(n, static_cast<std::size_t>(cap));
    } catch (const std::exception&) {
      // Unparseable values leave the default in place.
    }
  }
  return n;
}

/// out[i] = fn(i) for i < count, split into contiguous blocks. Results land
/// by index, so output order never depends on scheduling.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn)
{
  std::vector<T> out(count);
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  const std::size_t block = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        const std::size_t end = std::min(count, (w + 1) * block);
        for (std::size_t i = w * block; i < end; ++i) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

} // namespace fockradial
