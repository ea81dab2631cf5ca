#pragma once

#include <stdexcept>
#include <string>

namespace smoothcvx {

enum class ErrorKind { input, config, domain, numeric, unsupported, parse };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Bad argument shapes or values supplied by the caller.
struct InputError : Error {
  explicit InputError(const std::string& w) : Error(ErrorKind::input, w) {}
};
// Parameter combinations that make an algorithm ill-defined.
struct ConfigError : Error {
  explicit ConfigError(const std::string& w) : Error(ErrorKind::config, w) {}
};
// Point outside the domain of a function (e.g. entropy at a non-positive coordinate).
struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorKind::domain, w) {}
};
struct NumericError : Error {
  explicit NumericError(const std::string& w) : Error(ErrorKind::numeric, w) {}
};
struct UnsupportedError : Error {
  explicit UnsupportedError(const std::string& w) : Error(ErrorKind::unsupported, w) {}
};
struct ParseError : Error {
  ParseError(std::size_t line, const std::string& w);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace smoothcvx
