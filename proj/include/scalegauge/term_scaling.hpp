#pragma once

#include <vector>

#include "scalegauge/scaled_numbers.hpp"

namespace sg {

// One summand a^j / b^k of a rational term. `numerator` and `denominator`
// are values inside the structure the term is evaluated in.
struct TermSummand {
  Complex numerator;
  int num_power = 1;
  Complex denominator;
  int den_power = 1;
};

struct RationalTerm {
  std::vector<TermSummand> summands;
};

// Evaluates the term with the compensated operations. The resulting element
// is c times the plain evaluation of the term on values: the factors of c
// cancel within each power, and the final division contributes one factor.
ScaledNumber eval_term_scaled(const RationalTerm& t, const ScaledStructure& s);

// Truncated power series sum_i coefficients[i] * x^i.
struct PowerSeries {
  std::vector<Complex> coefficients;
};

struct SeriesValue {
  ScaledNumber value;
  // 2 * |last retained term| in value space; the caller decides whether the
  // truncation is acceptable.
  double truncation_bound = 0.0;
};

// Horner evaluation with the compensated operations; the element of the
// result is c * f(a) up to the truncation residue.
SeriesValue eval_series_scaled(const PowerSeries& f, Complex a,
                               const ScaledStructure& s);

}  // namespace sg
