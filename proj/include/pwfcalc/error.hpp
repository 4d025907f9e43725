#pragma once

#include <stdexcept>
#include <string>

namespace pwfcalc {

enum class ErrorKind {
  parse,
  invalid_fusion,
  construction_rejected,
  ill_scoped_star,
  rule_mismatch,
  unbound_variable,
  not_representable,
  invalid_argument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace pwfcalc
