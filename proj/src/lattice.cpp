#include "toricstab/lattice.hpp"

#include "toricstab/errors.hpp"
#include "toricstab/integrate.hpp"
#include "toricstab/linalg.hpp"

namespace toricstab {

namespace {

// Visits every z in the bounding box of iP that satisfies all inequalities;
// strict = true asks for <l_j, z> < i * rhs_j instead.
template <typename F>
void scan(const Polytope& p, long i, bool strict, F&& visit) {
  const int n = p.dim();
  std::vector<long> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Rat mn = p.vertices()[0](k), mx = mn;
    for (const auto& v : p.vertices()) {
      if (v(k) < mn) mn = v(k);
      if (v(k) > mx) mx = v(k);
    }
    lo[static_cast<std::size_t>(k)] = ceil(mn * i).convert_to<long>();
    hi[static_cast<std::size_t>(k)] = floor(mx * i).convert_to<long>();
    if (lo[static_cast<std::size_t>(k)] > hi[static_cast<std::size_t>(k)]) return;
  }
  // integer bounds: <l, z> <= floor(i rhs), or <= ceil(i rhs) - 1 when strict
  std::vector<long> bound;
  for (const auto& h : p.halfspaces()) {
    const Rat r = h.rhs * i;
    bound.push_back(strict ? (ceil(r) - 1).convert_to<long>() : floor(r).convert_to<long>());
  }
  IntVec z(n);
  for (int k = 0; k < n; ++k) z(k) = lo[static_cast<std::size_t>(k)];
  while (true) {
    bool inside = true;
    for (std::size_t j = 0; j < bound.size() && inside; ++j) inside = p.halfspaces()[j].normal.dot(z) <= bound[j];
    if (inside) visit(z);
    int k = n - 1;
    while (k >= 0 && z(k) == hi[static_cast<std::size_t>(k)]) {
      z(k) = lo[static_cast<std::size_t>(k)];
      --k;
    }
    if (k < 0) return;
    ++z(k);
  }
}

}  // namespace

std::vector<IntVec> lattice_points(const Polytope& p, long i) {
  if (i < 0) throw Error(ErrorKind::InvalidArgument, "dilation must be non-negative");
  std::vector<IntVec> out;
  scan(p, i, false, [&](const IntVec& z) { out.push_back(z); });
  return out;
}

std::vector<RatVec> refined_points(const Polytope& p, long i) {
  if (i <= 0) throw Error(ErrorKind::InvalidArgument, "refinement must be positive");
  std::vector<RatVec> out;
  scan(p, i, false, [&](const IntVec& z) { out.push_back(to_rat(z) / Rat(i)); });
  return out;
}

long count_lattice_points(const Polytope& p, long i) {
  if (i < 0) throw Error(ErrorKind::InvalidArgument, "dilation must be non-negative");
  long c = 0;
  scan(p, i, false, [&](const IntVec&) { ++c; });
  return c;
}

long count_interior_lattice_points(const Polytope& p) {
  long c = 0;
  scan(p, 1, true, [&](const IntVec&) { ++c; });
  return c;
}

Rat EhrhartPoly::operator()(const Rat& t) const {
  return evaluate_poly(coeffs, t);
}

std::string EhrhartPoly::to_string() const {
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coeffs(k);
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rat a = neg ? Rat(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const bool unit = a == 1 && k > 0;
    if (!unit) out += toricstab::to_string(a);
    if (k > 0) out += std::string(unit ? "" : "*") + "t" + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return out.empty() ? "0" : out;
}

EhrhartPoly ehrhart(const Polytope& p) {
  if (!is_lattice_polytope(p)) throw Error(ErrorKind::NotLatticePolytope, "Ehrhart polynomial needs integral vertices");
  const int n = p.dim();
  EhrhartPoly e;
  std::vector<std::pair<Rat, Rat>> pts;
  for (long t = 0; t <= n + 2; ++t) {
    const long c = count_lattice_points(p, t);
    e.counts.emplace_back(t, c);
    pts.emplace_back(Rat(t), Rat(c));
  }
  e.coeffs = interpolate_poly(pts, n);
  if (e.coeffs(n) != p.volume())
    throw Error(ErrorKind::DegreeMismatch, "leading Ehrhart coefficient differs from the volume");
  if (Rat(2) * e.coeffs(n - 1) != boundary_integral(p, Poly::constant(n, Rat(1))))
    throw Error(ErrorKind::DegreeMismatch, "second Ehrhart coefficient differs from half the boundary volume");
  if (e.coeffs(0) != 1) throw Error(ErrorKind::DegreeMismatch, "constant Ehrhart coefficient is not 1");
  return e;
}

}  // namespace toricstab
