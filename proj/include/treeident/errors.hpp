#pragma once

#include <stdexcept>
#include <string>

namespace treeident {

/// Raised while reading tree files or CSV inputs; carries the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Raised when Markov data is inconsistent with the requested reconstruction.
class RecoveryError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by the realization stage (rank-0 data, log branch failures).
class EstimationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace treeident
