#pragma once

#include <atomic>

namespace folia {

// Cooperative cancellation for long-running computations (Groebner loops,
// Mora reductions, order-by-order solves). Callers keep ownership.
class CancelToken {
  public:
    void cancel() { flag_.store(true, std::memory_order_relaxed); }
    bool cancelled() const { return flag_.load(std::memory_order_relaxed); }

  private:
    std::atomic<bool> flag_{false};
};

} // namespace folia
