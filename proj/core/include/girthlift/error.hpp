#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace girthlift {

// Raised for invalid input: malformed graphs, violated preconditions,
// disconnected inputs and generator exhaustion.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A lift would exceed the configured vertex cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t required, std::size_t cap);

  std::size_t required() const noexcept { return required_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

}  // namespace girthlift
