#pragma once

#include <cmath>

namespace ucent {

/// phi(z) = (1 - e^{-z}) / z with phi(0) = 1.
///
/// Uses expm1 away from zero and the series 1 - z/2 below 1e-8, where the
/// truncation error z^2/6 is under one ulp.
template <typename Scalar>
Scalar phi(Scalar z) {
  using std::expm1;
  if (z < Scalar(1e-8)) return Scalar(1) - z / Scalar(2);
  return -expm1(-z) / z;
}

}  // namespace ucent
