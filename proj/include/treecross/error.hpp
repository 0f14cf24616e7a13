#ifndef TREECROSS_ERROR_HPP
#define TREECROSS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace treecross {

enum class ErrorKind {
  // forest validation
  NonContiguousLeaves,
  LongEdge,
  MissingLeafInOrder,
  LeafNotOnLayerOne,
  CycleDetected,
  Malformed,
  // solver preconditions
  NotTwoTrees,
  NotThreeLayers,
  OutOfGrid,
  TableNotFilled,
  InvalidParams,
  // runtime outcomes
  Infeasible,
  TooLarge,
  // io
  SchemaError,
  InvalidDrawing,
};

/// All library failures surface as this exception; kind() tells callers apart.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace treecross

#endif
