#ifndef NFG_ERROR_HPP
#define NFG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nfg {

// Every failure the library can signal. The CLI maps these onto exit codes,
// tests match on them directly.
enum class Errc {
  ShapeMismatch,
  NonFinitePayoff,
  EmptyGame,
  GameTooLarge,
  IndexOutOfBounds,
  SameStrategy,
  InvalidOrdering,
  InvalidValuation,
  InvalidModel,
  InvalidMixedStrategy,
  NotTwoByTwo,
  FileNotFound,
  ParseError,
  BadFlag,
};

const char* errc_name(Errc code);

class GameError : public std::runtime_error {
 public:
  GameError(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void throw_error(Errc code, const std::string& message) {
  throw GameError(code, message);
}

}  // namespace nfg

#endif  // NFG_ERROR_HPP
