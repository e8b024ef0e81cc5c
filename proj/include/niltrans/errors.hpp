#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace niltrans {

// Exit-code contract used by the CLI:
//   0 = all verdicts hold / all checks pass
//   1 = counterexample or property failure
//   2 = usage or parse error (ParseError, NotAGroupError, BadParamsError)
//   3 = a configured cap was exceeded (BudgetError, OrderLimitError)

class NotAGroupError : public std::runtime_error {
public:
  explicit NotAGroupError(const std::string& reason)
      : std::runtime_error("not a group: " + reason) {}
};

class OrderLimitError : public std::runtime_error {
public:
  OrderLimitError(std::size_t order, std::size_t cap)
      : std::runtime_error("order " + std::to_string(order) +
                           " exceeds configured cap " + std::to_string(cap)) {}
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  // Single-line inputs (words, cycle strings) report line 1.
  explicit ParseError(const std::string& what, std::size_t column = 0)
      : ParseError(what, 1, column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class BadParamsError : public std::runtime_error {
public:
  explicit BadParamsError(const std::string& what) : std::runtime_error(what) {}
};

// Search/enumeration caps (subgroup cap, node cap). Never a silent truncation.
class BudgetError : public std::runtime_error {
public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace niltrans
