#pragma once

#include <stdexcept>
#include <string>

namespace sms3 {

// Domain error with a stable machine-readable name (NotSemiMagic,
// NegativeEntry, Unrepresentable, OutOfBounds, InvalidIndex, ResourceBound,
// UsageError).
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void raise(const char* name, const std::string& message) {
  throw Error(name, message);
}

}  // namespace sms3
