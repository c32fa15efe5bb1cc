#pragma once

#include <stdexcept>
#include <string>

namespace diamondlab {

enum class ErrorCode {
  UniverseTooLarge,
  BadParameter,
  EmptySetMissing,
  BadDimensions,
  TooFewVertices,
  TooManyVertices,
  NotDiamondFree,
  Parse,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace diamondlab
