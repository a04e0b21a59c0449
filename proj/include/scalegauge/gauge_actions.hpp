#pragma once

#include <array>
#include <utility>
#include <vector>

#include "scalegauge/lattice_gauge.hpp"

namespace sg {

struct Couplings {
  double g_R = 1.0;      // coupling of A
  double g_I = 1.0;      // coupling of B
  double m = 0.0;        // matter mass
  double lambda_A = 0.0; // optional A mass
};

// Metric signature (+,-,-,-); axis 0 is time.
inline constexpr std::array<double, 4> kMetric = {+1.0, -1.0, -1.0, -1.0};

// Site-local phase rotation Lambda(x) = exp(i phi(x)). |Lambda| = 1 by
// construction.
class GaugeTransform {
 public:
  GaugeTransform(const Lattice& lat, std::vector<double> phi);

  double phi(std::int64_t site_index) const {
    return phi_[static_cast<std::size_t>(site_index)];
  }
  Complex lambda(std::int64_t site_index) const {
    return std::polar(1.0, phi(site_index));
  }
  const std::vector<double>& phi_values() const { return phi_; }

 private:
  std::vector<double> phi_;
};

// psi'(x) = Lambda(x) psi(x). Leaves |psi| unchanged per site.
ScalarField apply_gauge_scalar(const Lattice& lat, const ScalarField& psi,
                               const GaugeTransform& g);

// A' = A (unchanged, bit for bit). B'_mu(x) = B_mu(x) - d'_mu phi(x) / g_I
// with the same forward difference the covariant derivative uses; entries
// whose forward neighbor is missing are left unchanged.
GaugeFields transform_fields(const Lattice& lat, const GaugeFields& gf,
                             const GaugeTransform& g, const Couplings& c);

// |D'_mu(Lambda psi)(x) - Lambda(x) D_mu psi(x)| with D' built from the
// transformed fields. Exactly cancels in exact-link mode; O(dx) in
// first-order mode.
double check_covariance(const Lattice& lat, const ScalarField& psi,
                        const GaugeFields& gf, const GaugeTransform& g,
                        const Couplings& c, const Site& s, int axis,
                        DerivMode mode);

enum class WhichField { A, B };

// Antisymmetric forward-difference curl G_mu_nu = d'_mu F_nu - d'_nu F_mu,
// stored for mu < nu at sites where both forward neighbors exist.
class FieldStrength {
 public:
  FieldStrength(const Lattice& lat, const GaugeFields& gf, WhichField which);

  int rank() const { return rank_; }
  // Antisymmetry is served from storage: at(mu, nu) = -at(nu, mu), zero on
  // the diagonal. PathOutOfBounds where a forward neighbor is missing.
  double at(const Lattice& lat, const Site& s, int mu, int nu) const;

 private:
  int rank_;
  std::vector<double> g_;  // (site, pair) with pair index over mu < nu
};

FieldStrength field_strength(const Lattice& lat, const GaugeFields& gf,
                             WhichField which);

// (1/4) G_mu_nu G^mu^nu at the site, indices raised with the metric.
double yang_mills_density(const Lattice& lat, const FieldStrength& G, const Site& s);

// psi^dag D^mu D_mu psi - m^2 psi^dag psi. Needs two forward neighbors per
// axis.
Complex klein_gordon_density(const Lattice& lat, const ScalarField& psi,
                             const GaugeFields& gf, const Couplings& c,
                             const Site& s, DerivMode mode);

// Four complex components per site, component index fastest.
struct SpinorField {
  std::vector<Complex> values;
};

SpinorField make_spinor_field(const Lattice& lat);
std::array<Complex, 4> spinor_at(const Lattice& lat, const SpinorField& f, const Site& s);
void set_spinor_at(const Lattice& lat, SpinorField& f, const Site& s,
                   const std::array<Complex, 4>& v);

// Dirac-basis gamma matrices; gamma^0 hermitian, gamma^k antihermitian.
const std::array<CMatrix, 4>& gamma_matrices();
// max |{gamma^mu, gamma^nu} - 2 eta^mu^nu I| over all pairs; 0 up to nothing
// (entries are exact 0, +-1, +-i).
double gamma_algebra_defect();

// psibar i gamma^mu (D_mu psi) - m psibar psi
//   - (1/2) lambda^2 A^mu A_mu - (1/4) G_mu_nu G^mu^nu  (G built from B).
// The covariant derivative acts per spinor component.
Complex dirac_density(const Lattice& lat, const SpinorField& psi,
                      const GaugeFields& gf, const Couplings& c, const Site& s,
                      DerivMode mode);

// Sum over all (site, axis) of B_mu^2 (the dagger-form mass term), before and
// after the gauge transformation. Differs for any nonconstant phi.
std::pair<double, double> b_mass_violation(const Lattice& lat, const GaugeFields& gf,
                                           const GaugeTransform& g, const Couplings& c);

// Metric-contracted A^mu A_mu summed over sites (the optional A mass term,
// invariant under every gauge transformation since A itself is).
double a_mass_term(const Lattice& lat, const GaugeFields& gf);

// |D_mu psi with (B, Gamma) as separate i-coupled fields - D_mu psi with
// (B + Gamma, 0)|: only the sum of the two fields can matter.
double u1_redundancy_check(const Lattice& lat, const GaugeFields& gf,
                           const std::vector<double>& gamma_field,
                           const ScalarField& psi, const Couplings& c,
                           const Site& s, int axis, DerivMode mode);

}  // namespace sg
