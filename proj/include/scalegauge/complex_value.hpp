#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "scalegauge/error.hpp"

namespace sg {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline Complex require_finite(Complex z, const char* what) {
  if (!is_finite(z)) {
    raise(ErrorCode::NonFinite, std::string(what) + ": non-finite value");
  }
  return z;
}

// |actual - expected| scaled by max(1, |expected|).
inline double rel_residual(Complex actual, Complex expected) {
  return std::abs(actual - expected) / std::max(1.0, std::abs(expected));
}

inline double rel_residual(double actual, double expected) {
  return std::abs(actual - expected) / std::max(1.0, std::abs(expected));
}

}  // namespace sg
