#include "scalegauge/lattice.hpp"

#include <functional>
#include <string>

namespace sg {

Lattice::Lattice(std::vector<std::int32_t> dims, std::vector<double> spacing)
    : dims_(std::move(dims)), spacing_(std::move(spacing)) {
  if (dims_.empty() || dims_.size() > 4) {
    raise(ErrorCode::InvalidArgument, "lattice rank must be between 1 and 4");
  }
  if (spacing_.size() != dims_.size()) {
    raise(ErrorCode::ShapeMismatch, "one spacing per axis is required");
  }
  n_sites_ = 1;
  for (std::size_t a = 0; a < dims_.size(); ++a) {
    if (dims_[a] < 2) {
      raise(ErrorCode::InvalidArgument, "lattice extents must be >= 2");
    }
    if (!(spacing_[a] > 0.0)) {
      raise(ErrorCode::InvalidArgument, "lattice spacing must be > 0");
    }
    n_sites_ *= dims_[a];
  }
}

double Lattice::cell_volume() const {
  double v = 1.0;
  for (double dx : spacing_) v *= dx;
  return v;
}

bool Lattice::contains(const Site& s) const {
  if (s.size() != dims_.size()) return false;
  for (std::size_t a = 0; a < dims_.size(); ++a) {
    if (s[a] < 0 || s[a] >= dims_[a]) return false;
  }
  return true;
}

std::int64_t Lattice::index_of(const Site& s) const {
  if (!contains(s)) {
    raise(ErrorCode::PathOutOfBounds, "site is outside the lattice");
  }
  std::int64_t idx = 0;
  for (std::size_t a = 0; a < dims_.size(); ++a) {
    idx = idx * dims_[a] + s[a];
  }
  return idx;
}

Site Lattice::site_at(std::int64_t index) const {
  if (index < 0 || index >= n_sites_) {
    raise(ErrorCode::PathOutOfBounds, "site index out of range");
  }
  Site s(dims_.size());
  for (std::size_t a = dims_.size(); a-- > 0;) {
    s[a] = static_cast<std::int32_t>(index % dims_[a]);
    index /= dims_[a];
  }
  return s;
}

bool Lattice::has_neighbor(const Site& s, int axis, int dir) const {
  if (!contains(s) || axis < 0 || axis >= rank()) return false;
  Site n = s;
  n[static_cast<std::size_t>(axis)] += (dir >= 0 ? 1 : -1);
  return contains(n);
}

Site Lattice::neighbor(const Site& s, int axis, int dir) const {
  Site n = s;
  if (axis < 0 || axis >= rank()) {
    raise(ErrorCode::InvalidArgument, "axis out of range");
  }
  n[static_cast<std::size_t>(axis)] += (dir >= 0 ? 1 : -1);
  if (!contains(n)) {
    raise(ErrorCode::PathOutOfBounds,
          "neighbor step leaves the lattice (open boundaries)");
  }
  return n;
}

std::int64_t Lattice::link_index(const Site& s, int axis) const {
  return link_index(index_of(s), axis);
}

std::int64_t Lattice::link_index(std::int64_t site_index, int axis) const {
  return site_index * rank() + axis;
}

bool Lattice::is_interior(const Site& s) const {
  if (!contains(s)) return false;
  for (std::size_t a = 0; a < dims_.size(); ++a) {
    if (s[a] + 1 >= dims_[a]) return false;
  }
  return true;
}

ScalarField make_scalar_field(const Lattice& lat, Complex fill) {
  return {std::vector<Complex>(static_cast<std::size_t>(lat.n_sites()), fill)};
}

void require_shape(const Lattice& lat, const ScalarField& f, const char* what) {
  if (f.values.size() != static_cast<std::size_t>(lat.n_sites())) {
    raise(ErrorCode::ShapeMismatch, std::string(what) + ": field size does not match the lattice");
  }
}

Site path_endpoint(const Lattice& lat, const LatticePath& p) {
  Site cur = p.start;
  if (!lat.contains(cur)) {
    raise(ErrorCode::PathOutOfBounds, "path start is outside the lattice");
  }
  for (const PathStep& st : p.steps) {
    cur = lat.neighbor(cur, st.axis, st.sign);
  }
  return cur;
}

LatticePath reversed_path(const Lattice& lat, const LatticePath& p) {
  LatticePath rev;
  rev.start = path_endpoint(lat, p);
  rev.steps.reserve(p.steps.size());
  for (std::size_t i = p.steps.size(); i-- > 0;) {
    rev.steps.push_back({p.steps[i].axis, -p.steps[i].sign});
  }
  return rev;
}

std::vector<LatticePath> enumerate_monotone_paths(const Lattice& lat,
                                                  const Site& from, const Site& to) {
  if (!lat.contains(from) || !lat.contains(to)) {
    raise(ErrorCode::PathOutOfBounds, "path endpoints must lie inside the lattice");
  }
  const int rank = lat.rank();
  std::vector<std::int32_t> remaining(static_cast<std::size_t>(rank));
  std::vector<int> sign(static_cast<std::size_t>(rank), +1);
  for (int a = 0; a < rank; ++a) {
    const std::int32_t d = to[static_cast<std::size_t>(a)] - from[static_cast<std::size_t>(a)];
    remaining[static_cast<std::size_t>(a)] = d >= 0 ? d : -d;
    sign[static_cast<std::size_t>(a)] = d >= 0 ? +1 : -1;
  }

  std::vector<LatticePath> out;
  std::vector<PathStep> steps;
  std::function<void()> recurse = [&] {
    bool done = true;
    for (int a = 0; a < rank; ++a) {
      if (remaining[static_cast<std::size_t>(a)] > 0) {
        done = false;
        --remaining[static_cast<std::size_t>(a)];
        steps.push_back({a, sign[static_cast<std::size_t>(a)]});
        recurse();
        steps.pop_back();
        ++remaining[static_cast<std::size_t>(a)];
      }
    }
    if (done) {
      out.push_back({from, steps});
    }
  };
  recurse();
  return out;
}

}  // namespace sg
