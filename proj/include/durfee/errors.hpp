#ifndef DURFEE_ERRORS_HPP
#define DURFEE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace durfee {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (graph or ideal files); carries a line number when known.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Semantically invalid input (disconnected graph, indefinite form, bad family
// parameters, non-m-primary ideal, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A counting or enumeration budget was exhausted where the contract demands a
// hard error rather than a partial result.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace durfee

#endif
