#include "scalegauge/scaled_hilbert.hpp"

#include <cmath>

namespace sg {

CMatrix::CMatrix(int n) : n_(n), m_(static_cast<std::size_t>(n) * n, Complex(0.0, 0.0)) {
  if (n < 1) {
    raise(ErrorCode::DimensionMismatch, "matrix dimension must be >= 1");
  }
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::multiply(const CMatrix& rhs) const {
  if (n_ != rhs.n_) {
    raise(ErrorCode::DimensionMismatch, "matrix dimensions differ");
  }
  CMatrix out(n_);
  for (int r = 0; r < n_; ++r) {
    for (int k = 0; k < n_; ++k) {
      const Complex v = at(r, k);
      if (v == Complex(0.0, 0.0)) continue;
      for (int c = 0; c < n_; ++c) {
        out.at(r, c) += v * rhs.at(k, c);
      }
    }
  }
  return out;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(n_);
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      out.at(c, r) = std::conj(at(r, c));
    }
  }
  return out;
}

std::vector<Complex> CMatrix::apply(const std::vector<Complex>& v) const {
  if (static_cast<int>(v.size()) != n_) {
    raise(ErrorCode::DimensionMismatch, "matrix/vector dimensions differ");
  }
  std::vector<Complex> out(v.size(), Complex(0.0, 0.0));
  for (int r = 0; r < n_; ++r) {
    Complex acc(0.0, 0.0);
    for (int c = 0; c < n_; ++c) {
      acc += at(r, c) * v[static_cast<std::size_t>(c)];
    }
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

Complex CMatrix::determinant() const {
  CMatrix w = *this;
  Complex det(1.0, 0.0);
  for (int col = 0; col < n_; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n_; ++r) {
      if (std::abs(w.at(r, col)) > std::abs(w.at(pivot, col))) pivot = r;
    }
    if (std::abs(w.at(pivot, col)) == 0.0) return Complex(0.0, 0.0);
    if (pivot != col) {
      for (int c = 0; c < n_; ++c) std::swap(w.at(pivot, c), w.at(col, c));
      det = -det;
    }
    det *= w.at(col, col);
    for (int r = col + 1; r < n_; ++r) {
      const Complex f = w.at(r, col) / w.at(col, col);
      for (int c = col; c < n_; ++c) w.at(r, c) -= f * w.at(col, c);
    }
  }
  return det;
}

double CMatrix::unitarity_defect() const {
  const CMatrix prod = multiply(adjoint());
  double worst = 0.0;
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      const Complex expect = (r == c) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      worst = std::max(worst, std::abs(prod.at(r, c) - expect));
    }
  }
  return worst;
}

BasisMap::BasisMap(CMatrix m, double tol) : m_(std::move(m)) {
  const double defect = m_.unitarity_defect();
  if (defect > tol) {
    raise(ErrorCode::InvalidArgument,
          "basis map is not unitary (defect " + std::to_string(defect) + ")");
  }
}

BasisMap BasisMap::identity(int n) { return BasisMap(CMatrix::identity(n)); }

BasisMap BasisMap::random_unitary(int n, SplitMix64& rng) {
  CMatrix m(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      m.at(r, c) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
  }
  // Modified Gram-Schmidt over rows, with a resample guard for the (measure
  // zero) degenerate draws.
  for (int r = 0; r < n; ++r) {
    for (int prev = 0; prev < r; ++prev) {
      Complex proj(0.0, 0.0);
      for (int c = 0; c < n; ++c) proj += std::conj(m.at(prev, c)) * m.at(r, c);
      for (int c = 0; c < n; ++c) m.at(r, c) -= proj * m.at(prev, c);
    }
    double norm = 0.0;
    for (int c = 0; c < n; ++c) norm += std::norm(m.at(r, c));
    norm = std::sqrt(norm);
    if (norm < 1e-8) {
      return random_unitary(n, rng);
    }
    for (int c = 0; c < n; ++c) m.at(r, c) /= norm;
  }
  return BasisMap(std::move(m), 1e-10);
}

bool BasisMap::is_identity() const {
  for (int r = 0; r < m_.dim(); ++r) {
    for (int c = 0; c < m_.dim(); ++c) {
      const Complex expect = (r == c) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      if (m_.at(r, c) != expect) return false;
    }
  }
  return true;
}

bool BasisMap::is_special(double tol) const {
  return std::abs(m_.determinant() - Complex(1.0, 0.0)) <= tol;
}

ScaledHilbertRep make_rep(Complex c, BasisMap basis, SiteId site) {
  if (c == Complex(0.0, 0.0)) {
    raise(ErrorCode::ZeroScale, "scaled Hilbert representation needs a nonzero scale");
  }
  return {require_finite(c, "scale"), std::move(basis), site};
}

namespace {

void require_dim(const HVector& v, const ScaledHilbertRep& rep) {
  if (static_cast<int>(v.components.size()) != rep.basis.dim()) {
    raise(ErrorCode::DimensionMismatch, "vector dimension does not match the representation");
  }
}

}  // namespace

HVector local_rep_vector(const HVector& psi_y, const ScaledHilbertRep& rep) {
  require_dim(psi_y, rep);
  std::vector<Complex> out = rep.basis.matrix().apply(psi_y.components);
  for (Complex& z : out) z = require_finite(rep.scale * z, "local_rep_vector");
  return {std::move(out), rep.site};
}

HVector scaled_smul(Complex a_element, const HVector& psi, const ScaledHilbertRep& rep) {
  require_dim(psi, rep);
  std::vector<Complex> out(psi.components.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = require_finite(a_element * psi.components[i] / rep.scale, "scaled_smul");
  }
  return {std::move(out), psi.site};
}

Complex scaled_inner(const HVector& phi, const HVector& psi, const ScaledHilbertRep& rep) {
  require_dim(phi, rep);
  require_dim(psi, rep);
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < phi.components.size(); ++i) {
    acc += std::conj(phi.components[i]) * psi.components[i];
  }
  return require_finite(acc / std::conj(rep.scale), "scaled_inner");
}

EquivalenceReport tuple_equiv_check(const ScaledHilbertRep& rep, int samples,
                                    std::uint64_t seed) {
  if (!rep.basis.is_identity()) {
    return {false, 0, 0.0, "skipped: component-wise equivalence is checked with V = 1"};
  }

  SplitMix64 rng(seed);
  const int n = rep.basis.dim();
  const ScaledStructure s = make_structure(rep.scale, rep.site);
  double worst = 0.0;
  int cases = 0;

  auto random_vec = [&] {
    HVector v;
    v.site = rep.site;
    v.components.resize(static_cast<std::size_t>(n));
    for (Complex& z : v.components) {
      z = Complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    }
    return v;
  };

  for (int i = 0; i < samples; ++i) {
    const HVector phi = random_vec();
    const HVector psi = random_vec();
    const Complex a_value(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    const ScaledNumber a = element_with_value(a_value, s);

    // scalar multiplication against per-component scaled_mul
    const HVector prod = scaled_smul(a.element, psi, rep);
    for (int k = 0; k < n; ++k) {
      const ScaledNumber comp{psi.components[static_cast<std::size_t>(k)], s};
      worst = std::max(worst, rel_residual(prod.components[static_cast<std::size_t>(k)],
                                           scaled_mul(a, comp).element));
    }

    // inner product against a sum of per-component scaled products
    ScaledNumber acc = vacuum_of(s);
    for (int k = 0; k < n; ++k) {
      const ScaledNumber pc{phi.components[static_cast<std::size_t>(k)], s};
      const ScaledNumber qc{psi.components[static_cast<std::size_t>(k)], s};
      acc = scaled_add(acc, scaled_mul(scaled_conj(pc), qc));
    }
    worst = std::max(worst, rel_residual(scaled_inner(phi, psi, rep), acc.element));
    cases += n + 1;
  }

  return {true, cases, worst, ""};
}

}  // namespace sg
