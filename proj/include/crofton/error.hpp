#pragma once

#include <stdexcept>
#include <string>

namespace crofton {

// Every failure the library reports carries a short machine-readable code
// ("dimension-mismatch", "not-smooth", ...) next to the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace crofton
