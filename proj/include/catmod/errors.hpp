#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace catmod {

// Domain error carrying a stable machine-readable code ("SortError",
// "BoundsExceeded", ...) next to the human message.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace catmod
