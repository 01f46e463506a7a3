#pragma once

#include <stdexcept>
#include <string>

namespace arq {

// Domain failures carry a stable machine-readable name next to the prose.
// CLI maps these to exit code 1 and prints the name.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

}  // namespace arq
