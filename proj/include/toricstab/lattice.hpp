#pragma once

#include "toricstab/polytope.hpp"
#include "toricstab/rational.hpp"

#include <utility>
#include <vector>

namespace toricstab {

/// All z in Z^n with <l_j, z> <= i * rhs_j, sorted lexicographically.
std::vector<IntVec> lattice_points(const Polytope& p, long i);

/// P intersected with (Z/i)^n, i.e. lattice_points(P, i) / i.
std::vector<RatVec> refined_points(const Polytope& p, long i);

long count_lattice_points(const Polytope& p, long i);
long count_interior_lattice_points(const Polytope& p);

struct EhrhartPoly {
  RatVec coeffs;  // ascending: coeffs(k) multiplies t^k
  /// (t, Card(tP cap Z^n)) for every count used, including the verification rows.
  std::vector<std::pair<long, long>> counts;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rat operator()(const Rat& t) const;
  std::string to_string() const;  // e.g. "12*t^3 + 9*t^2 + 3*t + 1"
};

/// Interpolates through t = 0..n, verifies at n+1 and n+2, and checks
/// c_n = Vol, 2 c_{n-1} = Vol_sigma(boundary), c_0 = 1.
/// Throws NotLatticePolytope or DegreeMismatch.
EhrhartPoly ehrhart(const Polytope& p);

}  // namespace toricstab
