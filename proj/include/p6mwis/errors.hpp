#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace p6mwis {

enum class ErrorKind {
  Guard,         // instance larger than an exhaustive routine allows
  Budget,        // work counter exhausted
  Parse,         // malformed input file
  Invariant,     // internal consistency check failed
  Precondition,  // caller violated a documented precondition
  NotP6Free,     // a structural guarantee that needs P6-freeness failed on this input
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Guard: return "guard";
    case ErrorKind::Budget: return "budget";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Invariant: return "invariant";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::NotP6Free: return "not-p6-free";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Process exit code for an error kind.
inline int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::Guard:
    case ErrorKind::Budget: return 3;
    case ErrorKind::Invariant: return 4;
    default: return 1;
  }
}

[[noreturn]] inline void fail(ErrorKind k, const std::string& what) { throw Error(k, what); }

inline void check(bool cond, ErrorKind k, std::string_view what) {
  if (!cond) fail(k, std::string(what));
}

}  // namespace p6mwis
