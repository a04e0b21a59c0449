#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "scalegauge/lattice.hpp"
#include "scalegauge/scaled_hilbert.hpp"

namespace sg {

// Real gauge fields A, B with one component per (site, axis), stored flat in
// link_index order.
struct GaugeFields {
  std::vector<double> A;
  std::vector<double> B;
};

GaugeFields zero_gauge_fields(const Lattice& lat);
void require_shape(const Lattice& lat, const GaugeFields& gf, const char* what);

// Complex link factor per (site, axis), for the link from the site to its
// forward neighbor. Reverse links are served as exact inverses.
struct LinkField {
  std::vector<Complex> forward;
};

void require_shape(const Lattice& lat, const LinkField& links, const char* what);

// link(x, mu, +) = exp((A_mu(x) + i B_mu(x)) * dx_mu), fields sampled at the
// tail site of the link.
LinkField links_from_fields(const Lattice& lat, const GaugeFields& gf);

// link(x, mu, +) = exp(pot(x + mu) - pot(x)); every path product telescopes
// to exp(pot(y) - pot(x)), the integrable case.
LinkField links_from_potential(const Lattice& lat, const ScalarField& pot);

// dir = +1 for the stored forward link, -1 for the inverse of the forward
// link that ends at this site.
Complex link_factor(const Lattice& lat, const LinkField& links, const Site& s,
                    int axis, int dir);

// 1 + (A_mu + i B_mu) dx_mu; differs from the exact link by at most
// |w dx|^2 exp(|w dx|) with w = A_mu + i B_mu.
Complex first_order_link(const Lattice& lat, const GaugeFields& gf,
                         const Site& s, int axis);

// Ordinary product of link factors along the path; the factors commute, so
// no ordering is implied.
Complex path_product(const Lattice& lat, const LinkField& links,
                     const LatticePath& p);

// Log of the product of the four links around the elementary (mu, nu)
// square based at s. Vanishes exactly when the two two-step routes across
// the square agree: the discrete integrability test.
Complex plaquette_defect(const Lattice& lat, const LinkField& links,
                         const Site& s, int mu, int nu);

double max_plaquette_defect(const Lattice& lat, const LinkField& links);

using FieldFn = std::function<std::vector<double>(const std::vector<double>&)>;
using CurveFn = std::function<std::vector<double>(double)>;

// exp of the composite-midpoint quadrature of int_0^1 (A + iB)(P(s)) . P'(s) ds.
// The derivative is central-differenced when d_path is null.
Complex line_integral_holonomy(const FieldFn& A, const FieldFn& B,
                               const CurveFn& path, const CurveFn* d_path,
                               int n_quad);

enum class DerivMode {
  FirstOrder,  // forward difference + (g_R A + i g_I B) psi(x + mu)
  ExactLink,   // (exp((g_R A + i g_I B) dx) psi(x + mu) - psi(x)) / dx
};

// Forward difference; the sameness transport from the neighbor structure is
// the identity on stored values.
Complex forward_difference(const Lattice& lat, const ScalarField& f,
                           const Site& s, int axis);

Complex covariant_derivative_scalar(const Lattice& lat, const ScalarField& psi,
                                    const GaugeFields& gf, double g_R, double g_I,
                                    const Site& s, int axis, DerivMode mode);

// n complex components per site, component index fastest.
struct VectorField {
  int dim = 0;
  std::vector<Complex> values;
};

VectorField make_vector_field(const Lattice& lat, int dim);
HVector vector_at(const Lattice& lat, const VectorField& f, const Site& s);
void set_vector_at(const Lattice& lat, VectorField& f, const Site& s,
                   const std::vector<Complex>& v);

// Optional per-(site, axis) basis factor for the vector covariant derivative.
struct BasisLinkField {
  int dim = 0;
  std::vector<CMatrix> mats;
};

// (c V psi(x + mu) - psi(x)) / dx_mu with c the stored link factor and V the
// per-link basis factor (identity when null).
HVector covariant_derivative_vector(const Lattice& lat, const VectorField& psi,
                                    const LinkField& links,
                                    const BasisLinkField* V, const Site& s,
                                    int axis);

// sum_y c_{y,x} Phi(y) * cell volume, with c_{y,x} taken along the canonical
// axis-ordered staircase path from the reference site. Requires integrable
// links: every plaquette defect at most `integrability_tol`.
Complex scaled_space_integral(const Lattice& lat, const ScalarField& phi,
                              const LinkField& links, const Site& ref,
                              double integrability_tol = 1e-9);

}  // namespace sg
