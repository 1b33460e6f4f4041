#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace commgraph {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class SizeMismatch : public Error {
   public:
    SizeMismatch(std::size_t lhs, std::size_t rhs)
        : Error("ground-set size mismatch: " + std::to_string(lhs) + " vs "
                + std::to_string(rhs)) {}
  };

  class OutOfRange : public Error {
   public:
    using Error::Error;
  };

  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A size guard refused to run an exhaustive operation.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  // Parse failure in one of the element grammars. position is a 0-based
  // column into the input text.
  class ParseError : public Error {
   public:
    ParseError(std::string const& message, std::size_t position)
        : Error(message + " (at column " + std::to_string(position + 1) + ")"),
          position_(position) {}

    std::size_t position() const noexcept {
      return position_;
    }

   private:
    std::size_t position_;
  };

}  // namespace commgraph
