#pragma once

#include <stdexcept>
#include <string>

namespace slcomb {

/// Requested local dimension has no generator set or comb construction.
class UnsupportedDimension : public std::invalid_argument {
 public:
  explicit UnsupportedDimension(const std::string& what) : std::invalid_argument(what) {}
};

/// Operands (matrices, expressions, states) do not have compatible shapes.
class ShapeMismatch : public std::invalid_argument {
 public:
  explicit ShapeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A dense materialization or brute-force evaluation would exceed its size cap.
class SizeCapExceeded : public std::length_error {
 public:
  explicit SizeCapExceeded(const std::string& what) : std::length_error(what) {}
};

/// Orthogonalization against an operator whose self-pairing vanishes.
class DegeneratePivot : public std::domain_error {
 public:
  explicit DegeneratePivot(const std::string& what) : std::domain_error(what) {}
};

/// Rejection sampler hit its retry cap.
class SamplerExhausted : public std::runtime_error {
 public:
  explicit SamplerExhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace slcomb
