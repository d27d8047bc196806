#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <thread>
#include <vector>

namespace peelbc {

// Sources are processed in fixed-size chunks; every chunk accumulates into
// a private buffer and buffers are summed into the result in chunk order.
// The chunking does not depend on the thread count, so the floating-point
// result is identical for any number of workers.
inline constexpr std::size_t kSourceChunk = 64;

inline unsigned resolve_threads(unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return threads;
}

// make_worker() is called once per worker thread and must return a callable
// (std::size_t source_index, std::span<double> acc) adding that source's
// contribution to acc.
template <typename MakeWorker>
std::vector<double> reduce_over_sources(std::size_t num_sources,
                                        std::size_t width, unsigned threads,
                                        MakeWorker make_worker) {
  std::vector<double> total(width, 0.0);
  if (num_sources == 0) return total;
  const std::size_t chunks = (num_sources + kSourceChunk - 1) / kSourceChunk;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), chunks));

  auto run_chunk = [&](auto& worker, std::size_t chunk, std::span<double> acc) {
    std::fill(acc.begin(), acc.end(), 0.0);
    const std::size_t begin = chunk * kSourceChunk;
    const std::size_t end = std::min(num_sources, begin + kSourceChunk);
    for (std::size_t i = begin; i < end; ++i) worker(i, acc);
  };
  auto merge = [&](std::span<const double> acc) {
    for (std::size_t j = 0; j < width; ++j) total[j] += acc[j];
  };

  if (workers <= 1) {
    auto worker = make_worker();
    std::vector<double> acc(width);
    for (std::size_t c = 0; c < chunks; ++c) {
      run_chunk(worker, c, acc);
      merge(acc);
    }
    return total;
  }

  // Waves of `workers` chunks, merged in chunk order after each wave.
  std::vector<std::vector<double>> buffers(workers, std::vector<double>(width));
  std::vector<decltype(make_worker())> states;
  states.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) states.push_back(make_worker());
  for (std::size_t wave = 0; wave < chunks; wave += workers) {
    const std::size_t in_wave = std::min<std::size_t>(workers, chunks - wave);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < in_wave; ++w) {
        pool.emplace_back([&, w] { run_chunk(states[w], wave + w, buffers[w]); });
      }
    }
    for (std::size_t w = 0; w < in_wave; ++w) merge(buffers[w]);
  }
  return total;
}

}  // namespace peelbc
