#include "scalegauge/scaled_numbers.hpp"

#include <cmath>
#include <limits>

namespace sg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Ok: return "ok";
    case ErrorCode::ZeroScale: return "zero_scale";
    case ErrorCode::StructureMismatch: return "structure_mismatch";
    case ErrorCode::DivisionByVacuum: return "division_by_vacuum";
    case ErrorCode::SiteMismatch: return "site_mismatch";
    case ErrorCode::NotInBaseSet: return "not_in_base_set";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::ShapeMismatch: return "shape_mismatch";
    case ErrorCode::PathOutOfBounds: return "path_out_of_bounds";
    case ErrorCode::NotIntegrable: return "not_integrable";
    case ErrorCode::ZeroCoupling: return "zero_coupling";
    case ErrorCode::UnknownGenerator: return "unknown_generator";
    case ErrorCode::ConfigError: return "config_error";
    case ErrorCode::IoError: return "io_error";
    case ErrorCode::NonFinite: return "non_finite";
    case ErrorCode::InvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

ScaledStructure::ScaledStructure(Complex scale, SiteId site)
    : scale_(require_finite(scale, "scale")), site_(site) {
  if (scale == Complex(0.0, 0.0)) {
    raise(ErrorCode::ZeroScale,
          "scale factor must be nonzero: division by the scale is a basic operation");
  }
}

ScaledStructure make_structure(Complex c, SiteId site) {
  return ScaledStructure(c, site);
}

namespace {

const ScaledStructure& require_same_structure(const ScaledNumber& p,
                                              const ScaledNumber& q) {
  if (!(p.structure == q.structure)) {
    raise(ErrorCode::StructureMismatch,
          "operands belong to different scaled structures; "
          "arithmetic is defined only within one structure");
  }
  return p.structure;
}

}  // namespace

Complex value_of(const ScaledNumber& n) {
  return require_finite(n.element / n.structure.scale(), "value_of");
}

ScaledNumber element_with_value(Complex a, const ScaledStructure& s) {
  return {require_finite(s.scale() * require_finite(a, "value"), "element_with_value"), s};
}

ScaledNumber identity_of(const ScaledStructure& s) { return {s.scale(), s}; }

ScaledNumber vacuum_of(const ScaledStructure& s) { return {Complex(0.0, 0.0), s}; }

ScaledNumber scaled_add(const ScaledNumber& p, const ScaledNumber& q) {
  const auto& s = require_same_structure(p, q);
  return {require_finite(p.element + q.element, "scaled_add"), s};
}

ScaledNumber scaled_sub(const ScaledNumber& p, const ScaledNumber& q) {
  const auto& s = require_same_structure(p, q);
  return {require_finite(p.element - q.element, "scaled_sub"), s};
}

ScaledNumber scaled_mul(const ScaledNumber& p, const ScaledNumber& q) {
  const auto& s = require_same_structure(p, q);
  return {require_finite(p.element * q.element / s.scale(), "scaled_mul"), s};
}

ScaledNumber scaled_div(const ScaledNumber& p, const ScaledNumber& q) {
  const auto& s = require_same_structure(p, q);
  if (q.element == Complex(0.0, 0.0)) {
    raise(ErrorCode::DivisionByVacuum, "divisor is the number vacuum");
  }
  return {require_finite(s.scale() * p.element / q.element, "scaled_div"), s};
}

ScaledNumber scaled_conj(const ScaledNumber& p) {
  // Conjugation acts on the value, then the result is re-embedded:
  // c * conj(element / c), not conj(c) * conj(value).
  const Complex c = p.structure.scale();
  return {require_finite(c * std::conj(p.element / c), "scaled_conj"), p.structure};
}

Complex correspondence(Complex a, const ScaledStructure& s) {
  return require_finite(s.scale() * require_finite(a, "value"), "correspondence");
}

namespace {

Complex random_operand(SplitMix64& rng) {
  return Complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
}

// Bounded away from the vacuum for inverse/division axioms.
Complex random_nonzero(SplitMix64& rng) {
  for (;;) {
    Complex z = random_operand(rng);
    if (std::abs(z) > 0.05) return z;
  }
}

struct AxiomMax {
  const char* name;
  double worst = 0.0;
  void note(double r) { worst = std::max(worst, r); }
};

}  // namespace

AxiomReport check_field_axioms(const ScaledStructure& s, int samples,
                               std::uint64_t seed, double tol) {
  if (samples < 1) {
    raise(ErrorCode::InvalidArgument, "check_field_axioms: samples must be >= 1");
  }
  SplitMix64 rng(seed);

  AxiomMax add_comm{"add_commutative"};
  AxiomMax add_assoc{"add_associative"};
  AxiomMax add_ident{"add_identity"};
  AxiomMax add_inv{"add_inverse"};
  AxiomMax mul_comm{"mul_commutative"};
  AxiomMax mul_assoc{"mul_associative"};
  AxiomMax mul_ident{"mul_identity"};
  AxiomMax mul_inv{"mul_inverse"};
  AxiomMax distrib{"distributive"};
  AxiomMax conj_invol{"conj_involution"};
  AxiomMax conj_add{"conj_additive"};
  AxiomMax conj_mul{"conj_multiplicative"};
  AxiomMax valuation{"valuation_homomorphism"};

  const ScaledNumber one = identity_of(s);
  const ScaledNumber zero = vacuum_of(s);

  for (int i = 0; i < samples; ++i) {
    const Complex av = random_nonzero(rng);
    const Complex bv = random_nonzero(rng);
    const Complex cv = random_operand(rng);
    const ScaledNumber a = element_with_value(av, s);
    const ScaledNumber b = element_with_value(bv, s);
    const ScaledNumber c = element_with_value(cv, s);

    add_comm.note(rel_residual(scaled_add(a, b).element, scaled_add(b, a).element));
    add_assoc.note(rel_residual(scaled_add(scaled_add(a, b), c).element,
                                scaled_add(a, scaled_add(b, c)).element));
    add_ident.note(rel_residual(scaled_add(a, zero).element, a.element));
    add_inv.note(rel_residual(scaled_add(a, scaled_sub(zero, a)).element, 0.0));

    mul_comm.note(rel_residual(scaled_mul(a, b).element, scaled_mul(b, a).element));
    mul_assoc.note(rel_residual(scaled_mul(scaled_mul(a, b), c).element,
                                scaled_mul(a, scaled_mul(b, c)).element));
    mul_ident.note(rel_residual(scaled_mul(a, one).element, a.element));
    mul_inv.note(rel_residual(scaled_mul(a, scaled_div(one, a)).element, one.element));

    distrib.note(rel_residual(scaled_mul(a, scaled_add(b, c)).element,
                              scaled_add(scaled_mul(a, b), scaled_mul(a, c)).element));

    conj_invol.note(rel_residual(scaled_conj(scaled_conj(a)).element, a.element));
    conj_add.note(rel_residual(scaled_conj(scaled_add(a, b)).element,
                               scaled_add(scaled_conj(a), scaled_conj(b)).element));
    conj_mul.note(rel_residual(scaled_conj(scaled_mul(a, b)).element,
                               scaled_mul(scaled_conj(a), scaled_conj(b)).element));

    // Each operation must commute with valuation: evaluating on elements and
    // reading the value must match evaluating on values directly.
    valuation.note(rel_residual(value_of(scaled_add(a, b)), av + bv));
    valuation.note(rel_residual(value_of(scaled_mul(a, b)), av * bv));
    valuation.note(rel_residual(value_of(scaled_div(a, b)), av / bv));
    valuation.note(rel_residual(value_of(scaled_conj(a)), std::conj(av)));
  }

  AxiomReport report;
  for (const AxiomMax* ax : {&add_comm, &add_assoc, &add_ident, &add_inv,
                             &mul_comm, &mul_assoc, &mul_ident, &mul_inv,
                             &distrib, &conj_invol, &conj_add, &conj_mul,
                             &valuation}) {
    report.axioms.push_back({ax->name, ax->worst});
    report.max_residual = std::max(report.max_residual, ax->worst);
  }
  report.samples = samples;
  report.tolerance = tol;
  report.pass = report.max_residual <= tol;
  const double mag = std::abs(s.scale());
  report.poorly_conditioned = mag < 1e-6 || mag > 1e6;
  return report;
}

ScaledNaturals::ScaledNaturals(std::uint64_t k) : k_(k) {
  if (k == 0) {
    raise(ErrorCode::ZeroScale, "scaled naturals need k >= 1");
  }
}

std::uint64_t ScaledNaturals::require_member(std::uint64_t e) const {
  if (e % k_ != 0) {
    raise(ErrorCode::NotInBaseSet,
          std::to_string(e) + " is not a multiple of " + std::to_string(k_));
  }
  return e;
}

std::uint64_t ScaledNaturals::value(std::uint64_t element) const {
  return require_member(element) / k_;
}

std::uint64_t ScaledNaturals::add(std::uint64_t p, std::uint64_t q) const {
  return require_member(p) + require_member(q);
}

std::uint64_t ScaledNaturals::mul(std::uint64_t p, std::uint64_t q) const {
  // p*q is a multiple of k^2, so the quotient stays in the base set.
  return require_member(p) * require_member(q) / k_;
}

bool ScaledNaturals::less(std::uint64_t p, std::uint64_t q) const {
  return require_member(p) < require_member(q);
}

TransportMap compose(const TransportMap& first, const TransportMap& second) {
  if (first.to_site != second.from_site) {
    raise(ErrorCode::SiteMismatch, "transport maps do not chain: intermediate sites differ");
  }
  return {first.from_site, second.to_site,
          require_finite(first.factor * second.factor, "compose")};
}

ScaledNumber transport(const ScaledNumber& n, const TransportMap& t,
                       const ScaledStructure& target) {
  if (n.structure.site() != t.from_site) {
    raise(ErrorCode::SiteMismatch, "number does not live at the transport's source site");
  }
  if (target.site() != t.to_site) {
    raise(ErrorCode::SiteMismatch, "target structure does not live at the transport's destination site");
  }
  return element_with_value(value_of(n), target);
}

Complex local_representation(Complex value, const TransportMap& t) {
  return require_finite(t.factor * value, "local_representation");
}

}  // namespace sg
