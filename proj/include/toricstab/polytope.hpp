#pragma once

#include "toricstab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricstab {

/// <l, x> <= rhs with l a primitive integer vector.
struct HalfSpace {
  IntVec normal;
  Rat rhs;

  /// Rescales an arbitrary rational inequality <b, x> <= beta so that the
  /// normal becomes primitive integral. Throws DegenerateNormal for b = 0.
  static HalfSpace canonical(const RatVec& b, const Rat& beta);

  RatVec normal_rat() const { return to_rat(normal); }
  Rat eval(const RatVec& x) const;  // <l, x>
  bool contains(const RatVec& x) const { return eval(x) <= rhs; }
  bool tight(const RatVec& x) const { return eval(x) == rhs; }

  bool operator==(const HalfSpace& o) const { return normal == o.normal && rhs == o.rhs; }
};

/// n+1 affinely independent points.
class Simplex {
 public:
  explicit Simplex(std::vector<RatVec> vertices);

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  /// |det(v_1 - v_0, ..., v_n - v_0)|, i.e. n! * volume.
  const Rat& abs_det() const { return abs_det_; }
  Rat volume() const;

 private:
  std::vector<RatVec> vertices_;
  Rat abs_det_;
};

enum class Apex { LexMin, LexMax };

/// Full-dimensional bounded convex polytope, kept in both representations.
/// Immutable once built; the constructors validate and canonicalize:
/// normals are primitive, redundant inequalities are dropped (input order of
/// the survivors is preserved), vertices are sorted lexicographically.
class Polytope {
 public:
  static Polytope from_halfspaces(std::vector<HalfSpace> h, std::string name = {});
  static Polytope from_vertices(const std::vector<RatVec>& points, std::string name = {});

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }

  Polytope renamed(std::string name) const;

  bool contains(const RatVec& x) const;
  /// Indices of vertices lying on facet i.
  std::vector<std::size_t> facet_vertices(std::size_t i) const;

  Rat volume() const;

 private:
  Polytope() = default;
  int dim_ = 0;
  std::string name_;
  std::vector<HalfSpace> halfspaces_;
  std::vector<RatVec> vertices_;
};

/// Vertex set of {<l_i,x> <= rhs_i}; throws Unbounded / Empty / NotFullDimensional.
std::vector<RatVec> vertices_from_halfspaces(const std::vector<HalfSpace>& h);

/// Irredundant facets of conv(points); throws NotFullDimensional.
std::vector<HalfSpace> halfspaces_from_vertices(const std::vector<RatVec>& points);

/// {a : <a,b> >= -1 for all b in P}. Throws OriginNotInterior.
Polytope polar_dual(const Polytope& p);

/// Closed intersection, or nullopt when the interior is empty.
std::optional<Polytope> intersect_halfspace(const Polytope& p, const RatVec& b, const Rat& beta);
std::optional<Polytope> intersect_halfspaces(const Polytope& p, const std::vector<HalfSpace>& extra);

/// Image under x -> A x + t (A invertible).
Polytope affine_image(const Polytope& p, const RatMat& a, const RatVec& t);
Polytope dilate(const Polytope& p, const Rat& k);

/// Cone-over-facets triangulation from the lexicographically smallest (or
/// largest) vertex, applied recursively to the faces.
std::vector<Simplex> triangulate(const Polytope& p, Apex apex = Apex::LexMin);

/// Facet i seen through the coordinate projection that drops `axis`.
/// A point y of `projection` lifts to the facet point x with x_j = y_j for
/// j != axis and x_axis solved from <l, x> = rhs, i.e. x = lift * y + offset.
struct FacetChart {
  int axis = 0;
  Polytope projection;
  Rat scale;  // 1 / |l_axis|
  RatMat lift;
  RatVec offset;
};

/// Requires dim >= 2.
FacetChart facet_chart(const Polytope& p, std::size_t facet);

struct PolytopeFlags {
  bool reflexive = false;
  bool delzant = false;
};

PolytopeFlags is_reflexive_delzant(const Polytope& p);

bool all_rhs_one(const Polytope& p);
/// The lattice point t with <l, t> = rhs - 1 on every facet, i.e. P - t has
/// every rhs equal to 1; nullopt when P is not such a translate.
std::optional<RatVec> reflexive_center(const Polytope& p);
Polytope translate(const Polytope& p, const RatVec& t);
bool is_lattice_polytope(const Polytope& p);

}  // namespace toricstab
