#ifndef POLARMAC_ERRORS_HPP
#define POLARMAC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polarmac {

/// Bad user input: malformed problem files, parse errors, declaration mismatches.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text that does not conform to the polynomial grammar; carries the offset.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Operands built over different rings were mixed.
class RingMismatchError : public InputError {
 public:
  using InputError::InputError;
};

/// Random draws kept landing outside the generic locus after the retry budget.
class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The working prime cannot certify the computation
/// (e.g. a squarefree-part computation degenerated in characteristic p).
class BadPrimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An ideal expected to be zero-dimensional is not.
class ZeroDimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal invariant violation; indicates a bug, not bad input.
class EngineError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace polarmac

#endif
