#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>

#include "lexshell/checkers.hpp"

namespace lexshell::detail {

struct SearchTimeout {};

class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  explicit Deadline(const std::optional<std::chrono::duration<double>>& budget) : start_(Clock::now()) {
    if (budget) limit_ = start_ + std::chrono::duration_cast<Clock::duration>(*budget);
  }

  // Cheap enough to call per node; only reads the clock every 1024 calls.
  void tick() {
    if (!limit_) return;
    if ((++ticks_ & 1023U) != 0) return;
    if (Clock::now() > *limit_) throw SearchTimeout{};
  }

  double elapsed_seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  Clock::time_point start_;
  std::optional<Clock::time_point> limit_;
  std::uint64_t ticks_ = 0;
};

}  // namespace lexshell::detail
