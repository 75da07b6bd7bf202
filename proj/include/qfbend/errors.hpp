#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qfb {

// Every failure carries a short machine-readable code (stable identifier,
// printed by the CLI as "error: <code>: <message>") plus a human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qfb
