// Error types shared by every kahlerobs module.
//
// Absence of a solution (an unsolvable linear system, a word that does not
// reduce to the identity) is always a value, never an exception. The types
// here are reserved for malformed input and for requests the library cannot
// honour.

#ifndef KAHLEROBS_ERRORS_HPP_
#define KAHLEROBS_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kahlerobs {

  /// Base class of all recoverable kahlerobs errors.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// Malformed presentation or homomorphism text.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column "
                + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept {
      return line_;
    }
    std::size_t column() const noexcept {
      return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
  };

  /// Structurally invalid arguments (bad generator index, genus < 1, ...).
  class InputError : public Error {
   public:
    using Error::Error;
  };

  /// A truncated algebra would need more basis elements than allowed.
  class BudgetExceeded : public Error {
   public:
    BudgetExceeded(std::size_t required, std::size_t budget)
        : Error("dimension budget exceeded: need " + std::to_string(required)
                + " basis elements, budget is " + std::to_string(budget)),
          required_(required),
          budget_(budget) {}

    std::size_t required() const noexcept {
      return required_;
    }
    std::size_t budget() const noexcept {
      return budget_;
    }

   private:
    std::size_t required_;
    std::size_t budget_;
  };

  /// A source relator does not map to the identity at the requested level.
  class VerificationError : public Error {
   public:
    VerificationError(std::string const& msg, std::size_t relator)
        : Error(msg), relator_(relator) {}

    /// Index of the first failing source relator.
    std::size_t relator() const noexcept {
      return relator_;
    }

   private:
    std::size_t relator_;
  };

  /// Exact verification requested for a target whose word problem is not
  /// decided by this library.
  class UnsupportedWordProblem : public Error {
   public:
    using Error::Error;
  };

}  // namespace kahlerobs

#endif  // KAHLEROBS_ERRORS_HPP_
