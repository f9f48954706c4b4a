#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fatsys {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidGraph : Error {
  using Error::Error;
};

struct UnknownCycleId : Error {
  using Error::Error;
};

struct DeletingEverything : Error {
  DeletingEverything() : Error("deletion subset must be a proper subset of the standard cycles") {}
};

struct CycleCapExceeded : Error {
  explicit CycleCapExceeded(std::size_t cap)
      : Error("simple cycle count exceeds cap " + std::to_string(cap)), cap(cap) {}
  std::size_t cap;
};

struct NotACycle : Error {
  using Error::Error;
};

struct NotFourRegular : Error {
  using Error::Error;
};

struct BadParameter : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct MissingLength : Error {
  using Error::Error;
};

struct InconsistentEqualities : Error {
  InconsistentEqualities() : Error("equality constraints are inconsistent") {}
};

struct InternalError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

}  // namespace fatsys
