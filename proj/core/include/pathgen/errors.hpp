#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pathgen {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by the condition and domain-spec parsers. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// A free variable of the expression is missing from the valuation / box.
class UnboundVariableError : public Error {
 public:
  explicit UnboundVariableError(const std::string& name)
      : Error("unbound variable '" + name + "'"), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// An integer dimension is too small for the requested grid resolution.
class DegenerateDomainError : public Error {
 public:
  using Error::Error;
};

// boundary_band called for cells that are not Moore neighbors.
class NotAdjacentError : public Error {
 public:
  using Error::Error;
};

// The first-valid scan ran out of resolutions or probe budget.
class ExhaustedError : public Error {
 public:
  ExhaustedError(std::uint64_t probes_used, int last_n)
      : Error("search exhausted after " + std::to_string(probes_used) +
              " probes (last resolution n=" + std::to_string(last_n) + ")"),
        probes_used_(probes_used),
        last_n_(last_n) {}

  std::uint64_t probes_used() const { return probes_used_; }
  int last_n() const { return last_n_; }

 private:
  std::uint64_t probes_used_;
  int last_n_;
};

// Generation hit the cap_factor * count limit before collecting count points.
class AcceptanceTooLowError : public Error {
 public:
  AcceptanceTooLowError(std::uint64_t generated, std::uint64_t accepted)
      : Error("acceptance rate too low: " + std::to_string(accepted) +
              " accepted after " + std::to_string(generated) + " generated"),
        generated_(generated),
        accepted_(accepted) {}

  std::uint64_t generated() const { return generated_; }
  std::uint64_t accepted() const { return accepted_; }

 private:
  std::uint64_t generated_;
  std::uint64_t accepted_;
};

// Interval refutation proved the condition unsatisfiable over the whole box.
class UnsatProvenError : public Error {
 public:
  using Error::Error;
};

}  // namespace pathgen
