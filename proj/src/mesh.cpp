#include "idic/mesh.hpp"

#include <algorithm>
#include <cmath>

namespace idic {

const char* to_string(BoundarySide s) {
  switch (s) {
    case BoundarySide::Left: return "left";
    case BoundarySide::Right: return "right";
    case BoundarySide::Top: return "top";
    case BoundarySide::Bottom: return "bottom";
  }
  return "?";
}

Mesh::Mesh(int n, double origin, double side) : n_(n), origin_(origin), side_(side) {
  if (n < 1) throw std::invalid_argument("Mesh: n_per_side must be >= 1");
  if (!(side > 0.0)) throw std::invalid_argument("Mesh: side length must be positive");
  h_ = side_ / n_;

  vertices_.reserve(static_cast<size_t>(n_ + 1) * (n_ + 1));
  for (int iy = 0; iy <= n_; ++iy)
    for (int ix = 0; ix <= n_; ++ix)
      vertices_.emplace_back(origin_ + ix * h_, origin_ + iy * h_);

  // Cell (ix,iy) splits into (a,b,c) and (a,c,d) with a=(ix,iy), b=(ix+1,iy),
  // c=(ix+1,iy+1), d=(ix,iy+1); both counterclockwise.
  triangles_.reserve(static_cast<size_t>(2) * n_ * n_);
  for (int iy = 0; iy < n_; ++iy) {
    for (int ix = 0; ix < n_; ++ix) {
      const int a = vertex_index(ix, iy);
      const int b = vertex_index(ix + 1, iy);
      const int c = vertex_index(ix + 1, iy + 1);
      const int d = vertex_index(ix, iy + 1);
      triangles_.push_back({a, b, c});
      triangles_.push_back({a, c, d});
    }
  }

  for (int i = 0; i < n_; ++i) {
    boundary_edges_.push_back({vertex_index(0, i), vertex_index(0, i + 1), BoundarySide::Left});
    boundary_edges_.push_back({vertex_index(n_, i), vertex_index(n_, i + 1), BoundarySide::Right});
    boundary_edges_.push_back({vertex_index(i, 0), vertex_index(i + 1, 0), BoundarySide::Bottom});
    boundary_edges_.push_back({vertex_index(i, n_), vertex_index(i + 1, n_), BoundarySide::Top});
  }

  // Lower triangle (a,b,c): phi_a = 1 - x/h, phi_b = (x-y)/h, phi_c = y/h.
  grads_lower_ = {Vec2(-1.0 / h_, 0.0), Vec2(1.0 / h_, -1.0 / h_), Vec2(0.0, 1.0 / h_)};
  // Upper triangle (a,c,d): phi_a = 1 - y/h, phi_c = x/h, phi_d = (y-x)/h.
  grads_upper_ = {Vec2(0.0, -1.0 / h_), Vec2(1.0 / h_, 0.0), Vec2(-1.0 / h_, 1.0 / h_)};
}

Vec2 Mesh::centroid(int t) const {
  const auto& tri = triangles_[t];
  return (vertices_[tri[0]] + vertices_[tri[1]] + vertices_[tri[2]]) / 3.0;
}

double Mesh::signed_area(int t) const {
  const auto& tri = triangles_[t];
  const Vec2 e1 = vertices_[tri[1]] - vertices_[tri[0]];
  const Vec2 e2 = vertices_[tri[2]] - vertices_[tri[0]];
  return 0.5 * (e1.x() * e2.y() - e1.y() * e2.x());
}

bool Mesh::try_locate(const Vec2& x, PointLocation& loc) const {
  // Snap tolerance keeps boundary quadrature points inside.
  const double tol = 1e-12 * std::max(1.0, side_);
  const double rx = (x.x() - origin_) / h_;
  const double ry = (x.y() - origin_) / h_;
  if (rx < -tol / h_ || ry < -tol / h_ || rx > n_ + tol / h_ || ry > n_ + tol / h_) return false;

  int ix = std::clamp(static_cast<int>(std::floor(rx)), 0, n_ - 1);
  int iy = std::clamp(static_cast<int>(std::floor(ry)), 0, n_ - 1);
  const double xi = rx - ix;
  const double eta = ry - iy;

  const int cell = 2 * (iy * n_ + ix);
  if (xi >= eta) {
    // lower (a,b,c): bary of phi_a, phi_b, phi_c
    loc.triangle = cell;
    loc.bary = {1.0 - xi, xi - eta, eta};
  } else {
    loc.triangle = cell + 1;
    loc.bary = {1.0 - eta, xi, eta - xi};
  }
  return true;
}

PointLocation Mesh::locate(const Vec2& x) const {
  PointLocation loc;
  if (!try_locate(x, loc))
    throw OutOfDomainError("point (" + std::to_string(x.x()) + ", " + std::to_string(x.y()) +
                           ") outside mesh domain");
  return loc;
}

std::vector<int> Mesh::boundary_vertices(BoundarySide side) const {
  std::vector<int> out;
  out.reserve(n_ + 1);
  for (int i = 0; i <= n_; ++i) {
    switch (side) {
      case BoundarySide::Left: out.push_back(vertex_index(0, i)); break;
      case BoundarySide::Right: out.push_back(vertex_index(n_, i)); break;
      case BoundarySide::Bottom: out.push_back(vertex_index(i, 0)); break;
      case BoundarySide::Top: out.push_back(vertex_index(i, n_)); break;
    }
  }
  return out;
}

}  // namespace idic
