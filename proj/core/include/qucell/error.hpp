// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#pragma once

#include <stdexcept>
#include <string>

namespace qucell {

// Classifies every failure the engine can raise.  CLI exit codes and test
// assertions dispatch on the kind, never on the message text.
enum class ErrorKind {
  invalid_argument,  // caller passed data outside a documented domain
  parse,             // malformed textual input
  height_cap,        // computation would exceed the configured weight height cap
  pole,              // specialization hit a denominator zero
  consistency,       // an internal cross-check failed; indicates a bug
  unsupported,       // request is well-formed but outside engine scope
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace qucell
