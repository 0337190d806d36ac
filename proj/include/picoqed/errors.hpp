#ifndef PICOQED_ERRORS_HPP
#define PICOQED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace picoqed {

// Requested problem exceeds a hard size bound (e.g. Hilbert-space truncation).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A steady-state solve found a degenerate null space.
class MultiplicityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text could not be parsed; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace picoqed

#endif
