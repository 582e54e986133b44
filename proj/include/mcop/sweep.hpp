#pragma once

// Budgeted, optionally multi-threaded sweeps over independent work items.
// Results stay deterministic: items are indexed, workers pull indices from
// a shared counter, and when a time budget interrupts the sweep only the
// completed prefix is reported (work finished beyond the first gap is
// discarded so output never depends on scheduling).

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace mcop {

class BudgetClock {
 public:
  explicit BudgetClock(long long budget_ms = 0)
      : start_(std::chrono::steady_clock::now()), budget_ms_(budget_ms) {}

  double elapsed_ms() const {
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start_).count();
  }

  bool limited() const { return budget_ms_ > 0; }
  bool expired() const {
    return limited() && elapsed_ms() >= static_cast<double>(budget_ms_);
  }

 private:
  std::chrono::steady_clock::time_point start_;
  long long budget_ms_;
};

// Worker count: explicit request wins, then MCOP_WORKERS, then hardware
// concurrency, always at least 1.
inline int resolve_workers(int requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MCOP_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

struct SweepStatus {
  int total = 0;
  int completed = 0;  // length of the completed prefix
  bool budget_hit = false;
};

// Runs fn(index) for index in [0, total); fn must write its result into
// per-index storage owned by the caller.  Returns the status with the
// deterministic completed prefix length.
template <typename Fn>
SweepStatus run_sweep(int total, int workers, const BudgetClock& clock,
                      Fn&& fn) {
  SweepStatus status;
  status.total = total;
  if (total <= 0) return status;
  workers = std::max(1, std::min(workers, total));
  std::atomic<int> next{0};
  std::atomic<bool> stop{false};
  std::vector<char> done(static_cast<std::size_t>(total), 0);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        if (stop.load(std::memory_order_relaxed)) return;
        if (clock.expired()) {
          stop.store(true, std::memory_order_relaxed);
          return;
        }
        const int idx = next.fetch_add(1, std::memory_order_relaxed);
        if (idx >= total) return;
        fn(idx);
        done[static_cast<std::size_t>(idx)] = 1;
      }
    });
  }
  for (auto& th : pool) th.join();
  int prefix = 0;
  while (prefix < total && done[static_cast<std::size_t>(prefix)]) ++prefix;
  status.completed = prefix;
  status.budget_hit = (prefix < total);
  return status;
}

}  // namespace mcop
