#pragma once

#include <stdexcept>
#include <string>

namespace hyperstar {

/// Raised by the text-format reader; carries the 1-based source line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A normalized matrix was requested but some vertex has d_A(v) = 0.
class ZeroAdjacencyDegree : public std::runtime_error {
 public:
  explicit ZeroAdjacencyDegree(int vertex)
      : std::runtime_error("vertex " + std::to_string(vertex) +
                           " has zero adjacency degree"),
        vertex_(vertex) {}
  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

class NoConvergence : public std::runtime_error {
 public:
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

class Disconnected : public std::runtime_error {
 public:
  explicit Disconnected(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public std::runtime_error {
 public:
  explicit DimensionMismatch(const std::string& what)
      : std::runtime_error(what) {}
};

class InvalidPlan : public std::runtime_error {
 public:
  explicit InvalidPlan(const std::string& what) : std::runtime_error(what) {}
};

class NotUniform : public std::runtime_error {
 public:
  explicit NotUniform(const std::string& what) : std::runtime_error(what) {}
};

class InfeasibleProfile : public std::runtime_error {
 public:
  explicit InfeasibleProfile(const std::string& what)
      : std::runtime_error(what) {}
};

class UnbalancedWeight : public std::runtime_error {
 public:
  explicit UnbalancedWeight(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace hyperstar
