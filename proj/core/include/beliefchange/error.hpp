#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bc {

// Error buckets the CLI maps onto exit codes: Input -> 1, Limit -> 2.
enum class ErrorKind { Input, Limit };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

// Syntax error in concrete formula or KB text. `position` is a 0-based byte
// offset into the offending string; messages report it 1-based.
class ParseError : public Error {
public:
  ParseError(std::string message, std::size_t position)
      : Error(ErrorKind::Input, std::move(message)), position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class UnknownAtomError : public ParseError {
public:
  UnknownAtomError(std::string name, std::size_t position)
      : ParseError("unknown atom '" + name + "' at column " + std::to_string(position + 1),
                   position),
        name_(std::move(name)) {}

  const std::string& atom_name() const { return name_; }

private:
  std::string name_;
};

class LimitError : public Error {
public:
  explicit LimitError(std::string message) : Error(ErrorKind::Limit, std::move(message)) {}
};

// An explicit selection, incision or infra choice that fails its validity
// conditions; the message names the violated condition.
class InvalidChoiceError : public Error {
public:
  explicit InvalidChoiceError(std::string message)
      : Error(ErrorKind::Input, std::move(message)) {}
};

}  // namespace bc
