#include "scalegauge/lattice_gauge.hpp"

#include <cmath>
#include <string>

namespace sg {

GaugeFields zero_gauge_fields(const Lattice& lat) {
  const std::size_t n = static_cast<std::size_t>(lat.n_sites()) * lat.rank();
  return {std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
}

void require_shape(const Lattice& lat, const GaugeFields& gf, const char* what) {
  const std::size_t n = static_cast<std::size_t>(lat.n_sites()) * lat.rank();
  if (gf.A.size() != n || gf.B.size() != n) {
    raise(ErrorCode::ShapeMismatch,
          std::string(what) + ": gauge fields do not match the lattice shape");
  }
}

void require_shape(const Lattice& lat, const LinkField& links, const char* what) {
  const std::size_t n = static_cast<std::size_t>(lat.n_sites()) * lat.rank();
  if (links.forward.size() != n) {
    raise(ErrorCode::ShapeMismatch,
          std::string(what) + ": link field does not match the lattice shape");
  }
}

LinkField links_from_fields(const Lattice& lat, const GaugeFields& gf) {
  require_shape(lat, gf, "links_from_fields");
  LinkField out;
  out.forward.resize(gf.A.size());
  for (std::int64_t site = 0; site < lat.n_sites(); ++site) {
    for (int axis = 0; axis < lat.rank(); ++axis) {
      const std::size_t l = static_cast<std::size_t>(lat.link_index(site, axis));
      const Complex w(gf.A[l], gf.B[l]);
      out.forward[l] = require_finite(std::exp(w * lat.spacing(axis)), "links_from_fields");
    }
  }
  return out;
}

LinkField links_from_potential(const Lattice& lat, const ScalarField& pot) {
  require_shape(lat, pot, "links_from_potential");
  LinkField out;
  out.forward.assign(static_cast<std::size_t>(lat.n_sites()) * lat.rank(), Complex(1.0, 0.0));
  for (std::int64_t idx = 0; idx < lat.n_sites(); ++idx) {
    const Site s = lat.site_at(idx);
    for (int axis = 0; axis < lat.rank(); ++axis) {
      if (!lat.has_neighbor(s, axis, +1)) continue;  // far face: link never used
      const Complex diff = pot.at(lat, lat.neighbor(s, axis, +1)) - pot.at(lat, s);
      out.forward[static_cast<std::size_t>(lat.link_index(idx, axis))] =
          require_finite(std::exp(diff), "links_from_potential");
    }
  }
  return out;
}

Complex link_factor(const Lattice& lat, const LinkField& links, const Site& s,
                    int axis, int dir) {
  require_shape(lat, links, "link_factor");
  if (dir >= 0) {
    if (!lat.has_neighbor(s, axis, +1)) {
      raise(ErrorCode::PathOutOfBounds, "forward link leaves the lattice");
    }
    return links.forward[static_cast<std::size_t>(lat.link_index(s, axis))];
  }
  const Site tail = lat.neighbor(s, axis, -1);
  return 1.0 / links.forward[static_cast<std::size_t>(lat.link_index(tail, axis))];
}

Complex first_order_link(const Lattice& lat, const GaugeFields& gf,
                         const Site& s, int axis) {
  require_shape(lat, gf, "first_order_link");
  const std::size_t l = static_cast<std::size_t>(lat.link_index(s, axis));
  const Complex w(gf.A[l], gf.B[l]);
  return 1.0 + w * lat.spacing(axis);
}

Complex path_product(const Lattice& lat, const LinkField& links,
                     const LatticePath& p) {
  require_shape(lat, links, "path_product");
  Site cur = p.start;
  if (!lat.contains(cur)) {
    raise(ErrorCode::PathOutOfBounds, "path start is outside the lattice");
  }
  Complex prod(1.0, 0.0);
  for (const PathStep& st : p.steps) {
    prod *= link_factor(lat, links, cur, st.axis, st.sign);
    cur = lat.neighbor(cur, st.axis, st.sign);
  }
  return require_finite(prod, "path_product");
}

Complex plaquette_defect(const Lattice& lat, const LinkField& links,
                         const Site& s, int mu, int nu) {
  require_shape(lat, links, "plaquette_defect");
  if (mu == nu) {
    raise(ErrorCode::InvalidArgument, "plaquette axes must differ");
  }
  const Site s_mu = lat.neighbor(s, mu, +1);
  const Site s_nu = lat.neighbor(s, nu, +1);
  // around the square: +mu, +nu, -mu, -nu
  const Complex up = link_factor(lat, links, s, mu, +1) *
                     link_factor(lat, links, s_mu, nu, +1);
  const Complex across = link_factor(lat, links, s, nu, +1) *
                         link_factor(lat, links, s_nu, mu, +1);
  return std::log(up / across);
}

double max_plaquette_defect(const Lattice& lat, const LinkField& links) {
  double worst = 0.0;
  for (std::int64_t idx = 0; idx < lat.n_sites(); ++idx) {
    const Site s = lat.site_at(idx);
    for (int mu = 0; mu < lat.rank(); ++mu) {
      if (!lat.has_neighbor(s, mu, +1)) continue;
      for (int nu = mu + 1; nu < lat.rank(); ++nu) {
        if (!lat.has_neighbor(s, nu, +1)) continue;
        worst = std::max(worst, std::abs(plaquette_defect(lat, links, s, mu, nu)));
      }
    }
  }
  return worst;
}

Complex line_integral_holonomy(const FieldFn& A, const FieldFn& B,
                               const CurveFn& path, const CurveFn* d_path,
                               int n_quad) {
  if (n_quad < 2) {
    raise(ErrorCode::InvalidArgument, "line_integral_holonomy needs n_quad >= 2");
  }
  const double h = 1.0 / n_quad;

  auto derivative = [&](double s) {
    if (d_path) return (*d_path)(s);
    const double eps = 1e-6;
    const double lo = std::max(0.0, s - eps);
    const double hi = std::min(1.0, s + eps);
    const std::vector<double> p0 = path(lo);
    const std::vector<double> p1 = path(hi);
    std::vector<double> d(p0.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = (p1[i] - p0[i]) / (hi - lo);
    return d;
  };

  Complex integral(0.0, 0.0);
  for (int i = 0; i < n_quad; ++i) {
    const double s = (i + 0.5) * h;
    const std::vector<double> x = path(s);
    const std::vector<double> a = A(x);
    const std::vector<double> b = B(x);
    const std::vector<double> dp = derivative(s);
    if (a.size() != x.size() || b.size() != x.size() || dp.size() != x.size()) {
      raise(ErrorCode::ShapeMismatch, "field and curve dimensions differ");
    }
    Complex dot(0.0, 0.0);
    for (std::size_t k = 0; k < x.size(); ++k) {
      dot += Complex(a[k], b[k]) * dp[k];
    }
    integral += dot * h;
  }
  return require_finite(std::exp(integral), "line_integral_holonomy");
}

Complex forward_difference(const Lattice& lat, const ScalarField& f,
                           const Site& s, int axis) {
  require_shape(lat, f, "forward_difference");
  const Site fwd = lat.neighbor(s, axis, +1);
  return (f.at(lat, fwd) - f.at(lat, s)) / lat.spacing(axis);
}

Complex covariant_derivative_scalar(const Lattice& lat, const ScalarField& psi,
                                    const GaugeFields& gf, double g_R, double g_I,
                                    const Site& s, int axis, DerivMode mode) {
  require_shape(lat, psi, "covariant_derivative_scalar");
  require_shape(lat, gf, "covariant_derivative_scalar");
  const Site fwd = lat.neighbor(s, axis, +1);
  const std::size_t l = static_cast<std::size_t>(lat.link_index(s, axis));
  const Complex w(g_R * gf.A[l], g_I * gf.B[l]);
  const double dx = lat.spacing(axis);
  const Complex psi_fwd = psi.at(lat, fwd);
  if (mode == DerivMode::ExactLink) {
    return (std::exp(w * dx) * psi_fwd - psi.at(lat, s)) / dx;
  }
  return (psi_fwd - psi.at(lat, s)) / dx + w * psi_fwd;
}

VectorField make_vector_field(const Lattice& lat, int dim) {
  if (dim < 1) {
    raise(ErrorCode::DimensionMismatch, "vector field dimension must be >= 1");
  }
  return {dim, std::vector<Complex>(static_cast<std::size_t>(lat.n_sites()) * dim,
                                    Complex(0.0, 0.0))};
}

HVector vector_at(const Lattice& lat, const VectorField& f, const Site& s) {
  const std::int64_t idx = lat.index_of(s);
  HVector v;
  v.site = idx;
  v.components.assign(f.values.begin() + idx * f.dim,
                      f.values.begin() + (idx + 1) * f.dim);
  return v;
}

void set_vector_at(const Lattice& lat, VectorField& f, const Site& s,
                   const std::vector<Complex>& v) {
  if (static_cast<int>(v.size()) != f.dim) {
    raise(ErrorCode::DimensionMismatch, "component count does not match the field");
  }
  const std::int64_t idx = lat.index_of(s);
  std::copy(v.begin(), v.end(), f.values.begin() + idx * f.dim);
}

HVector covariant_derivative_vector(const Lattice& lat, const VectorField& psi,
                                    const LinkField& links,
                                    const BasisLinkField* V, const Site& s,
                                    int axis) {
  require_shape(lat, links, "covariant_derivative_vector");
  if (V && V->dim != psi.dim) {
    raise(ErrorCode::DimensionMismatch, "basis link field dimension differs from the vector field");
  }
  const Site fwd = lat.neighbor(s, axis, +1);
  const double dx = lat.spacing(axis);
  const Complex c = link_factor(lat, links, s, axis, +1);

  HVector here = vector_at(lat, psi, s);
  HVector ahead = vector_at(lat, psi, fwd);
  std::vector<Complex> transported =
      V ? V->mats[static_cast<std::size_t>(lat.link_index(s, axis))].apply(ahead.components)
        : ahead.components;

  HVector out;
  out.site = here.site;
  out.components.resize(transported.size());
  for (std::size_t i = 0; i < transported.size(); ++i) {
    out.components[i] = (c * transported[i] - here.components[i]) / dx;
  }
  return out;
}

Complex scaled_space_integral(const Lattice& lat, const ScalarField& phi,
                              const LinkField& links, const Site& ref,
                              double integrability_tol) {
  require_shape(lat, phi, "scaled_space_integral");
  require_shape(lat, links, "scaled_space_integral");
  const double defect = max_plaquette_defect(lat, links);
  if (defect > integrability_tol) {
    raise(ErrorCode::NotIntegrable,
          "links are path dependent (max plaquette defect " + std::to_string(defect) + ")");
  }
  if (!lat.contains(ref)) {
    raise(ErrorCode::PathOutOfBounds, "reference site is outside the lattice");
  }

  const double volume = lat.cell_volume();
  Complex sum(0.0, 0.0);
  for (std::int64_t idx = 0; idx < lat.n_sites(); ++idx) {
    const Site y = lat.site_at(idx);
    // canonical axis-ordered staircase from ref to y
    LatticePath p;
    p.start = ref;
    for (int axis = 0; axis < lat.rank(); ++axis) {
      const std::int32_t d = y[static_cast<std::size_t>(axis)] -
                             ref[static_cast<std::size_t>(axis)];
      const int sign = d >= 0 ? +1 : -1;
      for (std::int32_t k = 0; k < (d >= 0 ? d : -d); ++k) {
        p.steps.push_back({axis, sign});
      }
    }
    sum += path_product(lat, links, p) * phi.values[static_cast<std::size_t>(idx)] * volume;
  }
  return require_finite(sum, "scaled_space_integral");
}

}  // namespace sg
