#pragma once

#include <stdexcept>
#include <string>

namespace minpart {

// Error families map to CLI exit codes: validation -> 2, numerical -> 3,
// unresolved partition -> 4.
class Error : public std::runtime_error {
 public:
  Error(std::string what, int exit_code)
      : std::runtime_error(std::move(what)), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what, 2) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(what, 3) {}
};

struct DuplicatePole : ValidationError {
  explicit DuplicatePole(const std::string& what) : ValidationError(what) {}
};

struct PoleOutsideDomain : ValidationError {
  explicit PoleOutsideDomain(const std::string& what) : ValidationError(what) {}
};

struct TwoPolesInOneHole : ValidationError {
  explicit TwoPolesInOneHole(const std::string& what) : ValidationError(what) {}
};

struct EmptyGrid : ValidationError {
  explicit EmptyGrid(const std::string& what) : ValidationError(what) {}
};

struct HoleUnresolved : ValidationError {
  explicit HoleUnresolved(const std::string& what) : ValidationError(what) {}
};

struct PoleOnEdge : NumericalError {
  explicit PoleOnEdge(const std::string& what) : NumericalError(what) {}
};

struct NoConvergence : NumericalError {
  NoConvergence(const std::string& what, double best_residual)
      : NumericalError(what), best_residual(best_residual) {}
  double best_residual;
};

struct DegenerateProjection : NumericalError {
  explicit DegenerateProjection(const std::string& what) : NumericalError(what) {}
};

struct ComponentTooSmall : ValidationError {
  explicit ComponentTooSmall(const std::string& what) : ValidationError(what) {}
};

struct NonHalfInteger : ValidationError {
  explicit NonHalfInteger(const std::string& what) : ValidationError(what) {}
};

class UnresolvedPartition : public Error {
 public:
  explicit UnresolvedPartition(const std::string& what) : Error(what, 4) {}
};

struct ParseError : ValidationError {
  explicit ParseError(const std::string& what) : ValidationError(what) {}
};

}  // namespace minpart
