#pragma once

#include <array>
#include <memory>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace idic {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

enum class BoundarySide { Left, Right, Top, Bottom };

const char* to_string(BoundarySide s);

struct BoundaryEdge {
  int v0 = -1;  // endpoints, ordered by increasing coordinate along the side
  int v1 = -1;
  BoundarySide side = BoundarySide::Left;
};

/// Result of point location: containing triangle plus barycentric coordinates.
struct PointLocation {
  int triangle = -1;
  std::array<double, 3> bary{};
};

class OutOfDomainError : public std::runtime_error {
 public:
  explicit OutOfDomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Structured triangulation of an axis-aligned square [origin, origin+side]^2.
/// Each of the n x n cells is split along its lower-left -> upper-right
/// diagonal; vertices are row-major with y varying slowest. All triangles have
/// positive orientation and identical area h^2/2.
class Mesh {
 public:
  static Mesh unit_square(int n_per_side) { return Mesh(n_per_side, 0.0, 1.0); }
  static Mesh square(int n_per_side, double origin, double side) {
    return Mesh(n_per_side, origin, side);
  }

  int n_per_side() const { return n_; }
  double origin() const { return origin_; }
  double side_length() const { return side_; }
  double cell_size() const { return h_; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int triangle_count() const { return static_cast<int>(triangles_.size()); }

  const Vec2& vertex(int v) const { return vertices_[v]; }
  const std::array<int, 3>& triangle(int t) const { return triangles_[t]; }
  const std::vector<Vec2>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }

  double triangle_area() const { return 0.5 * h_ * h_; }
  Vec2 centroid(int t) const;

  int vertex_index(int ix, int iy) const { return iy * (n_ + 1) + ix; }

  /// Constant gradients of the three P1 basis functions on triangle t,
  /// ordered like the triangle's vertex triple.
  const std::array<Vec2, 3>& basis_gradients(int t) const {
    return (t & 1) ? grads_upper_ : grads_lower_;
  }

  /// O(1) structured point location. Throws OutOfDomainError if x lies
  /// outside the mesh (beyond a small snap tolerance at the boundary).
  PointLocation locate(const Vec2& x) const;
  bool try_locate(const Vec2& x, PointLocation& loc) const;

  const std::vector<BoundaryEdge>& boundary_edges() const { return boundary_edges_; }
  std::vector<int> boundary_vertices(BoundarySide side) const;

  double signed_area(int t) const;

 private:
  Mesh(int n, double origin, double side);

  int n_;
  double origin_;
  double side_;
  double h_;
  std::vector<Vec2> vertices_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<BoundaryEdge> boundary_edges_;
  std::array<Vec2, 3> grads_lower_;
  std::array<Vec2, 3> grads_upper_;
};

using MeshPtr = std::shared_ptr<const Mesh>;

inline MeshPtr make_unit_square_mesh(int n) {
  return std::make_shared<const Mesh>(Mesh::unit_square(n));
}
inline MeshPtr make_square_mesh(int n, double origin, double side) {
  return std::make_shared<const Mesh>(Mesh::square(n, origin, side));
}

}  // namespace idic
