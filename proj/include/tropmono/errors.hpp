#ifndef TROPMONO_ERRORS_HPP_
#define TROPMONO_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropmono {

  // Raised when an argument violates an operation's precondition, e.g. a
  // dimension mismatch or a non-idempotent matrix passed where an
  // idempotent is required.
  class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Raised by the text parsers. position() is a 0-based byte offset into the
  // token being parsed.
  class ParseError : public std::invalid_argument {
   public:
    ParseError(std::string const& what, std::size_t position)
        : std::invalid_argument(what + " at position "
                                + std::to_string(position)),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  // A constructed witness failed its own exact verification. This is always
  // a defect in the library, never a consequence of user input.
  class VerificationFailure : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace tropmono

#endif  // TROPMONO_ERRORS_HPP_
