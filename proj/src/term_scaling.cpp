#include "scalegauge/term_scaling.hpp"

#include <cmath>

namespace sg {

namespace {

// Power by repeated scaled multiplication: j values, j-1 multiplications,
// so the embedded factors of c collapse to a single one.
ScaledNumber scaled_pow(const ScaledNumber& base, int power) {
  if (power < 1) {
    raise(ErrorCode::InvalidArgument, "term powers must be >= 1");
  }
  ScaledNumber acc = base;
  for (int i = 1; i < power; ++i) {
    acc = scaled_mul(acc, base);
  }
  return acc;
}

}  // namespace

ScaledNumber eval_term_scaled(const RationalTerm& t, const ScaledStructure& s) {
  ScaledNumber total = vacuum_of(s);
  for (const TermSummand& term : t.summands) {
    const ScaledNumber num = scaled_pow(element_with_value(term.numerator, s), term.num_power);
    const ScaledNumber den = scaled_pow(element_with_value(term.denominator, s), term.den_power);
    total = scaled_add(total, scaled_div(num, den));
  }
  return total;
}

SeriesValue eval_series_scaled(const PowerSeries& f, Complex a,
                               const ScaledStructure& s) {
  if (f.coefficients.empty()) {
    return {vacuum_of(s), 0.0};
  }
  const ScaledNumber x = element_with_value(a, s);
  const std::size_t n = f.coefficients.size();

  ScaledNumber acc = element_with_value(f.coefficients[n - 1], s);
  for (std::size_t i = n - 1; i-- > 0;) {
    acc = scaled_add(scaled_mul(acc, x), element_with_value(f.coefficients[i], s));
  }

  const double last_term =
      std::abs(f.coefficients[n - 1]) * std::pow(std::abs(a), static_cast<double>(n - 1));
  return {acc, 2.0 * last_term};
}

}  // namespace sg
