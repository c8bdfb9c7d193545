#include "sgh/parallel.hpp"

#include <thread>
#include <vector>

namespace sgh {

unsigned default_workers() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

void for_each_band(std::uint64_t total, unsigned workers,
                   const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
  if (workers == 0) workers = default_workers();
  if (total == 0) return;
  if (std::uint64_t(workers) > total) workers = unsigned(total);
  if (workers == 1) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t chunk = total / workers;
  const std::uint64_t rem = total % workers;
  std::uint64_t begin = 0;
  for (unsigned b = 0; b < workers; ++b) {
    std::uint64_t len = chunk + (b < rem ? 1 : 0);
    std::uint64_t end = begin + len;
    threads.emplace_back([&fn, b, begin, end] { fn(b, begin, end); });
    begin = end;
  }
  for (auto& t : threads) t.join();
}

}  // namespace sgh
