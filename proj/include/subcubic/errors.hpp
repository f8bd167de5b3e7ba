#pragma once

#include <stdexcept>
#include <string>

namespace subcubic {

// Base class for everything this library throws on bad input.
struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadEndpoint : GraphError {
  int vertex;
  explicit BadEndpoint(int v)
      : GraphError("edge endpoint out of range: " + std::to_string(v)), vertex(v) {}
};

struct DegreeExceeded : GraphError {
  int vertex;
  explicit DegreeExceeded(int v)
      : GraphError("vertex " + std::to_string(v) + " would exceed degree 3"), vertex(v) {}
};

struct NotDegreeTwo : GraphError {
  int vertex;
  explicit NotDegreeTwo(int v)
      : GraphError("vertex " + std::to_string(v) + " does not have degree 2"), vertex(v) {}
};

struct LoopAtVertex : GraphError {
  int vertex;
  explicit LoopAtVertex(int v)
      : GraphError("vertex " + std::to_string(v) + " is incident to a loop"), vertex(v) {}
};

struct NotABlock : GraphError {
  NotABlock() : GraphError("graph is not a single block") {}
};

struct NotCubic : GraphError {
  NotCubic() : GraphError("graph is not cubic") {}
};

struct TooLarge : GraphError {
  explicit TooLarge(const std::string& what) : GraphError(what) {}
};

struct OutOfBudget : GraphError {
  explicit OutOfBudget(const std::string& what) : GraphError(what) {}
};

struct PreconditionViolated : GraphError {
  explicit PreconditionViolated(const std::string& what) : GraphError(what) {}
};

struct UnknownName : GraphError {
  explicit UnknownName(const std::string& name) : GraphError("unknown graph name: " + name) {}
};

struct ParseError : GraphError {
  int line;
  ParseError(int line_no, const std::string& what)
      : GraphError("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

struct NotSimple : GraphError {
  NotSimple() : GraphError("graph has loops or parallel edges") {}
};

}  // namespace subcubic
