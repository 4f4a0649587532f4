#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cox {

// Every library error carries a stable machine-readable kind next to the
// human message. The CLI maps kinds onto exit codes.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace cox
