#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {

Error::Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

ParseError::ParseError(std::size_t line, const std::string& w)
    : Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + w), line_(line) {}

}  // namespace smoothcvx
