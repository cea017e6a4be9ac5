#pragma once

#include <stdexcept>
#include <string>

namespace fukaya {

// Bad user-supplied data (malformed objects, non-composable words, ...).
// The CLI maps this to exit code 2.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// A lattice sum hit the hard shell cap before meeting the tail tolerance.
// The CLI maps this to exit code 3.
class TruncationCapExceeded : public std::runtime_error {
 public:
  explicit TruncationCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input that the evaluator cannot handle (degenerate
// extrema ties, correction terms with unequal holonomy nodes, ...).
// The CLI maps this to exit code 4.
class UnsupportedPattern : public std::runtime_error {
 public:
  explicit UnsupportedPattern(const std::string& what) : std::runtime_error(what) {}
};

// A cone was requested over a morphism that is not closed. A kind of input
// error, so the CLI shares exit code 2 with InvalidInput.
class NotClosed : public InvalidInput {
 public:
  explicit NotClosed(const std::string& what) : InvalidInput(what) {}
};

}  // namespace fukaya
