#include "segdesc/analysis/relations.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace segdesc::analysis {

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const BoolMatrix& r) {
  const std::size_t n = r.size();
  auto strict = [&](std::size_t i, std::size_t k) { return i != k && r[i][k] && !r[k][i]; };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (!strict(i, k)) continue;
      bool bridged = false;
      for (std::size_t j = 0; j < n && !bridged; ++j) bridged = strict(i, j) && strict(j, k);
      if (!bridged) edges.emplace_back(i, k);
    }
  return edges;
}

bool is_reflexive(const BoolMatrix& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!r[i][i]) return false;
  return true;
}

bool is_transitive(const BoolMatrix& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r[i][j])
        for (std::size_t k = 0; k < n; ++k)
          if (r[j][k] && !r[i][k]) return false;
  return true;
}

BoolMatrix evaluate_pairs(std::size_t n, unsigned threads, const std::function<bool(std::size_t, std::size_t)>& cell) {
  BoolMatrix out(n, std::vector<bool>(n, false));
  std::vector<char> flat(n * n, 0);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, n * n)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t idx = next++; idx < n * n; idx = next++) {
      try {
        flat[idx] = cell(idx / n, idx % n) ? 1 : 0;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n * n;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  for (std::size_t idx = 0; idx < n * n; ++idx) out[idx / n][idx % n] = flat[idx] != 0;
  return out;
}

} // namespace segdesc::analysis
