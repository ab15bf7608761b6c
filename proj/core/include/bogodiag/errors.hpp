#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bogodiag {

// input: the caller handed us data that violates a precondition.
// numeric: a computation failed or an internal consistency check tripped.
enum class ErrorKind { input, numeric };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), kind_(kind), name_(std::move(name)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  ErrorKind kind_;
  std::string name_;
};

[[noreturn]] inline void throw_input(const std::string& name, const std::string& what) {
  throw Error(ErrorKind::input, name, what);
}

[[noreturn]] inline void throw_numeric(const std::string& name, const std::string& what) {
  throw Error(ErrorKind::numeric, name, what);
}

}  // namespace bogodiag
