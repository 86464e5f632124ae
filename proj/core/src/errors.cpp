#include "pga/errors.hpp"

#include <sstream>

namespace pga {

namespace {

std::string syntax_message(int line, int column, const std::string& found,
                           const std::vector<std::string>& expected) {
  std::ostringstream os;
  os << line << ":" << column << ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
    os << expected[i];
  }
  if (expected.empty()) os << "end of input";
  os << ", found " << found;
  return os.str();
}

}  // namespace

SyntaxError::SyntaxError(int line, int column, const std::string& found,
                         std::vector<std::string> expected)
    : std::runtime_error(syntax_message(line, column, found, expected)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

SemanticError::SemanticError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

}  // namespace pga
