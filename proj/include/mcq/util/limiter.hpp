// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_UTIL_LIMITER_HPP_
#define MCQ_UTIL_LIMITER_HPP_

#include <chrono>
#include <condition_variable>
#include <mutex>
#include <thread>

namespace mcq {

// Counting semaphore with a runtime limit (std::counting_semaphore wants a
// compile-time ceiling).
class Semaphore {
public:
  explicit Semaphore(int limit) : available_(limit) {}

  void acquire() {
    std::unique_lock lock(mutex_);
    cv_.wait(lock, [&] { return available_ > 0; });
    --available_;
  }
  void release() {
    {
      std::lock_guard lock(mutex_);
      ++available_;
    }
    cv_.notify_one();
  }

private:
  std::mutex mutex_;
  std::condition_variable cv_;
  int available_;
};

struct SemaphoreGuard {
  explicit SemaphoreGuard(Semaphore& s) : sem(s) { sem.acquire(); }
  ~SemaphoreGuard() { sem.release(); }
  Semaphore& sem;
};

// Token bucket; rate <= 0 disables limiting. Burst capacity is one second
// of budget (at least one request).
class TokenBucket {
public:
  explicit TokenBucket(double per_second)
      : rate_(per_second), capacity_(per_second > 1.0 ? per_second : 1.0),
        tokens_(capacity_), last_(Clock::now()) {}

  void acquire() {
    if (rate_ <= 0.0) return;
    std::unique_lock lock(mutex_);
    while (true) {
      refill();
      if (tokens_ >= 1.0) {
        tokens_ -= 1.0;
        return;
      }
      double deficit_s = (1.0 - tokens_) / rate_;
      auto wait = std::chrono::duration<double>(deficit_s);
      lock.unlock();
      std::this_thread::sleep_for(wait);
      lock.lock();
    }
  }

private:
  using Clock = std::chrono::steady_clock;

  void refill() {
    auto now = Clock::now();
    double dt = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    tokens_ = std::min(capacity_, tokens_ + dt * rate_);
  }

  std::mutex mutex_;
  double rate_;
  double capacity_;
  double tokens_;
  Clock::time_point last_;
};

}  // namespace mcq

#endif  // MCQ_UTIL_LIMITER_HPP_
