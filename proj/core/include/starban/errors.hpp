#pragma once

#include <stdexcept>
#include <string>

namespace starban {

/// Thrown when an iterative kernel stops without meeting its tolerance.
/// Carries the residual observed at the point of failure.
class numerical_error : public std::runtime_error {
 public:
  numerical_error(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace starban
