#pragma once

#include <cstdint>
#include <vector>

#include "scalegauge/complex_value.hpp"

namespace sg {

using Site = std::vector<std::int32_t>;

// Finite rectangular space-time lattice with open boundaries: paths and
// differences may not leave the volume, and nothing wraps around.
// Site indices are row-major with axis 0 slowest (flat index
// ((s0*e1 + s1)*e2 + s2)...), which also fixes CSV row order and the draw
// order of seeded field generators.
class Lattice {
 public:
  Lattice(std::vector<std::int32_t> dims, std::vector<double> spacing);

  int rank() const { return static_cast<int>(dims_.size()); }
  std::int64_t n_sites() const { return n_sites_; }
  std::int32_t extent(int axis) const { return dims_.at(static_cast<std::size_t>(axis)); }
  double spacing(int axis) const { return spacing_.at(static_cast<std::size_t>(axis)); }
  const std::vector<std::int32_t>& dims() const { return dims_; }
  const std::vector<double>& spacings() const { return spacing_; }
  double cell_volume() const;

  bool contains(const Site& s) const;
  std::int64_t index_of(const Site& s) const;  // PathOutOfBounds when outside
  Site site_at(std::int64_t index) const;

  bool has_neighbor(const Site& s, int axis, int dir) const;
  Site neighbor(const Site& s, int axis, int dir) const;  // PathOutOfBounds

  // Flat (site, axis) index for per-link and per-axis storage.
  std::int64_t link_index(const Site& s, int axis) const;
  std::int64_t link_index(std::int64_t site_index, int axis) const;

  // True when every coordinate has a forward neighbor.
  bool is_interior(const Site& s) const;

 private:
  std::vector<std::int32_t> dims_;
  std::vector<double> spacing_;
  std::int64_t n_sites_ = 0;
};

// One complex value per site.
struct ScalarField {
  std::vector<Complex> values;

  Complex at(const Lattice& lat, const Site& s) const {
    return values[static_cast<std::size_t>(lat.index_of(s))];
  }
  Complex& at(const Lattice& lat, const Site& s) {
    return values[static_cast<std::size_t>(lat.index_of(s))];
  }
};

ScalarField make_scalar_field(const Lattice& lat, Complex fill = Complex(0.0, 0.0));
void require_shape(const Lattice& lat, const ScalarField& f, const char* what);

struct PathStep {
  int axis = 0;
  int sign = +1;  // +1 or -1
};

struct LatticePath {
  Site start;
  std::vector<PathStep> steps;
};

// Walks the path and returns the endpoint; PathOutOfBounds if any
// intermediate site leaves the lattice.
Site path_endpoint(const Lattice& lat, const LatticePath& p);

LatticePath reversed_path(const Lattice& lat, const LatticePath& p);

// All lattice paths from `from` to `to` that never step against the
// coordinate-wise direction of travel. Their count is the multinomial
// coefficient of the per-axis step counts, so keep the extents small.
std::vector<LatticePath> enumerate_monotone_paths(const Lattice& lat,
                                                  const Site& from, const Site& to);

}  // namespace sg
