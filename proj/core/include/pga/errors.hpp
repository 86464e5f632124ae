#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pga {

/// The automaton's scalar cycles carry mass >= 1, so the Neumann series
/// I + M + M^2 + ... has no finite value.
class DivergentAutomatonError : public std::runtime_error {
 public:
  explicit DivergentAutomatonError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Conditioning removed all probability mass; there is no posterior.
class ZeroMassError : public std::runtime_error {
 public:
  explicit ZeroMassError(const std::string& what) : std::runtime_error(what) {}
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(int line, int column, const std::string& found,
              std::vector<std::string> expected);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

class SemanticError : public std::runtime_error {
 public:
  SemanticError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace pga
