#pragma once

#include <stdexcept>
#include <string>

namespace catana {

enum class ErrorCode {
  NonComposable,
  UnknownMorphism,
  UnknownObject,
  UnknownEntity,
  UnknownRelation,
  NotClosed,
  MissingIdentity,
  DuplicateName,
  ArityMismatch,
  MissingResultTable,
  DepthExceeded,
  ClosureExploded,
  NoStructuralImage,
  MalformedFunctor,
  InvalidAnalogy,
  BoundTooLarge,
  SyntaxError,
  SchemaError,
  SemanticError,
  IoError,
  Internal,
};

const char* error_code_name(ErrorCode code);

class EngineError : public std::runtime_error {
public:
  EngineError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw EngineError(code, what);
}

} // namespace catana
