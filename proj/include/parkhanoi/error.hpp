#pragma once

#include <stdexcept>
#include <string>

namespace parkhanoi {

// Malformed input: wrong length, entry out of range, unparsable text.
class validation_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input outside an operation's domain: displacement of a
// non-parking function, an illegal move, f applied to a non-ideal state.
class domain_error : public std::domain_error {
public:
  domain_error(const std::string& what, int condition = -1)
      : std::domain_error(what), condition_(condition) {}

  // Number of the first violated characterization condition, or -1.
  int condition() const noexcept { return condition_; }

private:
  int condition_;
};

class budget_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace parkhanoi
