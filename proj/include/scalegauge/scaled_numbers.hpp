#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scalegauge/complex_value.hpp"
#include "scalegauge/rng.hpp"

namespace sg {

using SiteId = std::int64_t;

// A complex number structure rescaled by a nonzero factor c and attached to a
// site. Its multiplicative identity is the base element c, multiplication
// compensates with a factor 1/c, division with a factor c, and conjugation
// acts on values rather than raw elements. Base-set elements are represented
// throughout by their value in the reference (scale 1) structure, so every
// scaled operation is a closed-form expression on those representatives.
class ScaledStructure {
 public:
  ScaledStructure(Complex scale, SiteId site);

  Complex scale() const { return scale_; }
  SiteId site() const { return site_; }

  friend bool operator==(const ScaledStructure&, const ScaledStructure&) = default;

 private:
  Complex scale_;
  SiteId site_;
};

ScaledStructure make_structure(Complex c, SiteId site);

// An element of the base set together with the structure it is read in.
// `element` is the representative in the reference structure; the value this
// number carries inside its own structure is element / scale.
struct ScaledNumber {
  Complex element;
  ScaledStructure structure;
};

Complex value_of(const ScaledNumber& n);
ScaledNumber element_with_value(Complex a, const ScaledStructure& s);

// element c (value 1) and element 0 (the number vacuum, value 0 everywhere)
ScaledNumber identity_of(const ScaledStructure& s);
ScaledNumber vacuum_of(const ScaledStructure& s);

ScaledNumber scaled_add(const ScaledNumber& p, const ScaledNumber& q);
ScaledNumber scaled_sub(const ScaledNumber& p, const ScaledNumber& q);
ScaledNumber scaled_mul(const ScaledNumber& p, const ScaledNumber& q);
ScaledNumber scaled_div(const ScaledNumber& p, const ScaledNumber& q);
ScaledNumber scaled_conj(const ScaledNumber& p);

// Value in the reference structure that corresponds to value a in s, i.e.
// c*a. Distinct from the sameness map, which carries a across unchanged;
// the two agree for every a only when c = 1.
Complex correspondence(Complex a, const ScaledStructure& s);

struct AxiomResidual {
  std::string axiom;
  double max_residual = 0.0;
};

struct AxiomReport {
  std::vector<AxiomResidual> axioms;
  double max_residual = 0.0;
  int samples = 0;
  double tolerance = 0.0;
  bool pass = false;
  // set when |scale| falls outside [1e-6, 1e6]; results may lose digits
  bool poorly_conditioned = false;
};

// Randomized check that the compensated operations satisfy the complex-field
// axioms (plus conjugation laws), and that each operation commutes with
// valuation. Failures are reported, never thrown.
AxiomReport check_field_axioms(const ScaledStructure& s, int samples,
                               std::uint64_t seed, double tol);

// Scaled naturals: base set = multiples of k, ordinary addition, product
// (p*q)/k, identity k. Exact 64-bit integer arithmetic, no tolerances.
class ScaledNaturals {
 public:
  explicit ScaledNaturals(std::uint64_t k);

  std::uint64_t k() const { return k_; }
  std::uint64_t identity() const { return k_; }
  bool contains(std::uint64_t element) const { return element % k_ == 0; }

  std::uint64_t embed(std::uint64_t n) const { return n * k_; }
  std::uint64_t value(std::uint64_t element) const;

  std::uint64_t add(std::uint64_t p, std::uint64_t q) const;
  std::uint64_t mul(std::uint64_t p, std::uint64_t q) const;
  bool less(std::uint64_t p, std::uint64_t q) const;

 private:
  std::uint64_t require_member(std::uint64_t e) const;
  std::uint64_t k_;
};

// Parallel transport between the structures at two sites, factored into a
// sameness component (copies values verbatim) and an explicit scale factor
// c_{y,x} applied only by the local-representation map.
struct TransportMap {
  SiteId from_site;
  SiteId to_site;
  Complex factor;
};

// first, then second: x -> y -> z gives factor c_{y,x} * c_{z,y}.
TransportMap compose(const TransportMap& first, const TransportMap& second);

// Sameness transport of n into the target structure: the numeric value is
// preserved verbatim and re-embedded at the destination.
ScaledNumber transport(const ScaledNumber& n, const TransportMap& t,
                       const ScaledStructure& target);

// Local representation of a value from the far site: multiply by the factor.
Complex local_representation(Complex value, const TransportMap& t);

}  // namespace sg
