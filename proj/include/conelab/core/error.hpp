#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace conelab {

/// Contract violation or domain error. `code()` is a short machine-readable
/// tag such as "dimension-mismatch" or "grid-too-coarse".
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

} // namespace conelab
