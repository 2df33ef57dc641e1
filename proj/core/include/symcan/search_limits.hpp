#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

namespace symcan {

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("search timed out") {}
};

// Optional wall-clock deadline, checked periodically inside the searches.
struct SearchLimits {
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void check(std::uint64_t nodes) const {
    if (deadline && (nodes & 0xff) == 0 && std::chrono::steady_clock::now() > *deadline)
      throw TimeoutError();
  }
};

}  // namespace symcan
