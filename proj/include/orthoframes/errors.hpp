#pragma once

#include <stdexcept>
#include <string>

namespace orthoframes {

// Every failure mode gets its own type so the CLI can map each one to a
// distinct exit code.

struct OrthoframesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : OrthoframesError {
  using OrthoframesError::OrthoframesError;
};

// Symbol function has a (near-)zero: the orthonormalization integrals do not
// converge and the pipeline must stop.
struct SymbolNotPositive : OrthoframesError {
  SymbolNotPositive(std::string msg, double p1, double p2, double value)
      : OrthoframesError(std::move(msg)), min_p1(p1), min_p2(p2), min_value(value) {}
  double min_p1;
  double min_p2;
  double min_value;
};

struct NonConvergedQuadrature : OrthoframesError {
  using OrthoframesError::OrthoframesError;
};

struct NonConvergedSum : OrthoframesError {
  using OrthoframesError::OrthoframesError;
};

struct GridMismatch : OrthoframesError {
  using OrthoframesError::OrthoframesError;
};

struct ShapeMismatch : OrthoframesError {
  using OrthoframesError::OrthoframesError;
};

struct DegenerateProbe : OrthoframesError {
  using OrthoframesError::OrthoframesError;
};

struct NotAFrame : OrthoframesError {
  using OrthoframesError::OrthoframesError;
};

}  // namespace orthoframes
