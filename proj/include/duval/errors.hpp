#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace duval {

enum class ErrorKind {
  Parse,
  Geometry,
  FieldExtension,
  Reducible,
  NonNormal,
  Consistency,
  Generation,
  Arithmetic,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(ErrorKind::Parse, msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct GeometryError : Error {
  explicit GeometryError(const std::string& msg) : Error(ErrorKind::Geometry, msg) {}
};

struct FieldExtensionRequired : Error {
  explicit FieldExtensionRequired(const std::string& msg) : Error(ErrorKind::FieldExtension, msg) {}
};

struct ReducibleInput : Error {
  explicit ReducibleInput(const std::string& msg) : Error(ErrorKind::Reducible, msg) {}
};

struct NonNormalInput : Error {
  explicit NonNormalInput(const std::string& msg) : Error(ErrorKind::NonNormal, msg) {}
};

struct ConsistencyViolation : Error {
  explicit ConsistencyViolation(const std::string& msg) : Error(ErrorKind::Consistency, msg) {}
};

struct GenerationFailed : Error {
  explicit GenerationFailed(const std::string& msg) : Error(ErrorKind::Generation, msg) {}
};

struct ArithmeticError : Error {
  explicit ArithmeticError(const std::string& msg) : Error(ErrorKind::Arithmetic, msg) {}
};

}  // namespace duval
