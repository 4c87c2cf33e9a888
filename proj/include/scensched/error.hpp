#pragma once

#include <stdexcept>
#include <string>

namespace scensched {

// Failure categories. The CLI maps each onto a distinct exit code.
enum class ErrorKind {
  kUsage,         // bad flags or incompatible configuration
  kPrecondition,  // instance shape or cap violated
  kParse,         // malformed input file
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse error tagged with a 1-based line number ("line 3: ...").
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

[[noreturn]] inline void throw_precondition(const std::string& what) {
  throw Error(ErrorKind::kPrecondition, what);
}

}  // namespace scensched
