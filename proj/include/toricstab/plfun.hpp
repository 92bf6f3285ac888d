#pragma once

#include "toricstab/integrate.hpp"
#include "toricstab/polytope.hpp"
#include "toricstab/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace toricstab {

/// a . x + c
struct AffineFn {
  RatVec a;
  Rat c;

  static AffineFn zero(int n) { return {RatVec::Zero(n), Rat(0)}; }
  static AffineFn coordinate(int n, int k);

  int dim() const { return static_cast<int>(a.size()); }
  Rat operator()(const RatVec& x) const { return a.dot(x) + c; }
  Poly poly() const { return Poly::affine(a, c); }
  bool is_constant() const { return a.isZero(); }

  /// The same function in chart coordinates: y -> f(A y + t).
  AffineFn pullback(const RatMat& lift, const RatVec& offset) const;

  AffineFn operator+(const AffineFn& o) const { return {a + o.a, c + o.c}; }
  AffineFn operator-(const AffineFn& o) const { return {a - o.a, c - o.c}; }
  AffineFn operator*(const Rat& s) const { return {a * s, c * s}; }
  bool operator==(const AffineFn& o) const { return a == o.a && c == o.c; }

  /// "-70/97*x3 - 15/97"
  std::string to_string() const;
};

enum class PLMode { Convex, Concave };

/// max (Convex) or min (Concave) of affine pieces.
struct PLFn {
  std::vector<AffineFn> pieces;
  PLMode mode = PLMode::Convex;

  static PLFn affine(const AffineFn& f) { return {{f}, PLMode::Convex}; }
  /// max{0, f}
  static PLFn simple(const AffineFn& f);

  int dim() const { return pieces.at(0).dim(); }
  Rat operator()(const RatVec& x) const;
  /// Adds the same affine function to every piece.
  PLFn plus(const AffineFn& f) const;
  PLFn scaled(const Rat& k) const;  // k > 0
};

struct Region {
  Polytope cell;
  AffineFn piece;
};

/// Cells of positive volume on which u is affine; they tile P.
std::vector<Region> linearity_regions(const Polytope& p, const PLFn& u);

/// int_P f * u dx
Rat integrate_pl(const Polytope& p, const Poly& f, const PLFn& u);
/// int_{boundary P} f * u dsigma
Rat boundary_integrate_pl(const Polytope& p, const Poly& f, const PLFn& u);

/// Concave g with graph the upper boundary of conv{(a, t) : t <= phi(a)},
/// as the min of its upper-facet affine functions. Throws DegenerateSpan
/// when the points do not affinely span R^n.
PLFn upper_hull(const std::vector<std::pair<RatVec, Rat>>& nodes);

/// For convex u and R > max u on P: is i*Q a lattice polytope, where
/// Q = {(x, t) : x in P, 0 <= t <= R - u(x)}?
bool degeneration_is_lattice(const Polytope& p, const PLFn& u, long i, const Rat& r);

}  // namespace toricstab
