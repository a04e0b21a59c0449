#pragma once

#include <string>
#include <vector>

#include "scalegauge/scaled_numbers.hpp"

namespace sg {

// Dense n x n complex matrix, row-major. Sized for the basis factors used
// here (n <= 8 in practice); not a general linear-algebra type.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int n);

  static CMatrix identity(int n);

  int dim() const { return n_; }
  Complex& at(int r, int c) { return m_[static_cast<std::size_t>(r) * n_ + c]; }
  Complex at(int r, int c) const { return m_[static_cast<std::size_t>(r) * n_ + c]; }

  CMatrix multiply(const CMatrix& rhs) const;
  CMatrix adjoint() const;
  std::vector<Complex> apply(const std::vector<Complex>& v) const;

  Complex determinant() const;       // Gaussian elimination with partial pivoting
  double unitarity_defect() const;   // max |(M M^dag - I)_{rc}|

 private:
  int n_ = 0;
  std::vector<Complex> m_;
};

// Unitary basis-change factor V. Checked unitary on construction.
class BasisMap {
 public:
  explicit BasisMap(CMatrix m, double tol = 1e-12);

  static BasisMap identity(int n);
  // Gram-Schmidt on a seeded random matrix; deterministic for a given rng state.
  static BasisMap random_unitary(int n, SplitMix64& rng);

  const CMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }
  bool is_identity() const;
  bool is_special(double tol = 1e-9) const;  // |det - 1| <= tol

 private:
  CMatrix m_;
};

struct HVector {
  std::vector<Complex> components;
  SiteId site = 0;
};

// Local representation of the Hilbert structure of a neighbor site: scale
// factor c, basis factor V, attached at `site`. Vectors handled through it
// are stored as representation elements c V psi; scalars follow the scaled
// complex structure with the same c.
struct ScaledHilbertRep {
  Complex scale;
  BasisMap basis;
  SiteId site = 0;
};

ScaledHilbertRep make_rep(Complex c, BasisMap basis, SiteId site);

// c V applied to the sameness-transported components of psi_y; result is
// tagged with the representation's site.
HVector local_rep_vector(const HVector& psi_y, const ScaledHilbertRep& rep);

// Compensated scalar multiplication (a . psi_i) / c, where `a_element` is the
// scalar's base element (c times its value).
HVector scaled_smul(Complex a_element, const HVector& psi, const ScaledHilbertRep& rep);

// Compensated inner product <phi, psi> / conj(c), conjugate-linear in the
// first argument. For representation elements cVphi, cVpsi the result element
// is c <phi, psi>.
Complex scaled_inner(const HVector& phi, const HVector& psi, const ScaledHilbertRep& rep);

struct EquivalenceReport {
  bool checked = false;
  int cases = 0;
  double max_residual = 0.0;
  std::string note;
};

// With V = 1, vectors of scaled numbers must behave component-wise like the
// scaled complex structure: addition, scalar multiplication and the inner
// product all commute with the per-component operations. For V != 1 the check
// is skipped (a basis rotation adds nothing to the component-wise claim).
EquivalenceReport tuple_equiv_check(const ScaledHilbertRep& rep, int samples,
                                    std::uint64_t seed);

}  // namespace sg
