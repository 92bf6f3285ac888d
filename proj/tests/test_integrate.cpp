#include "support.hpp"

#include "toricstab/integrate.hpp"

#include <doctest.h>

using namespace ts_test;

TEST_CASE("standard 2-simplex moments") {
  const Simplex s({rv({Rat(0), Rat(0)}), rv({Rat(1), Rat(0)}), rv({Rat(0), Rat(1)})});
  const Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
  CHECK(integrate_simplex(s, Poly::constant(2, Rat(1))) == Rat(1, 2));
  CHECK(integrate_simplex(s, x1 * x2) == Rat(1, 24));
  CHECK(integrate_simplex(s, x1 * x1) == Rat(1, 12));
  CHECK(integrate_simplex(s, x1.pow(3)) == Rat(1, 20));
}

TEST_CASE("cube integrals") {
  const Polytope c = cube(3);
  CHECK(integrate(c, Poly::constant(3, Rat(1))) == 8);
  CHECK(moment_vector(c).isZero());
  CHECK(integrate(c, Poly::variable(3, 0).pow(2)) == Rat(8, 3));
  CHECK(boundary_integral(c, Poly::constant(3, Rat(1))) == 24);
  CHECK(boundary_moment_vector(c).isZero());
  CHECK(boundary_integral(c, Poly::variable(3, 0).pow(2)) == Rat(40, 3));
}

TEST_CASE("boundary measure uses primitive normals") {
  // triangle with hypotenuse normal (1, 1): lattice length 2 there, 2 on each leg
  const Polytope t = Polytope::from_vertices({rv({Rat(0), Rat(0)}), rv({Rat(2), Rat(0)}), rv({Rat(0), Rat(2)})});
  CHECK(boundary_integral(t, Poly::constant(2, Rat(1))) == 6);
  // interval [-1, 2]: the boundary is two points
  const Polytope seg = Polytope::from_vertices({rv({Rat(-1)}), rv({Rat(2)})});
  CHECK(boundary_integral(seg, Poly::variable(1, 0)) == 1);
}

TEST_CASE("Poly algebra") {
  const Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  const Poly p = (x + y).pow(2) - x * x - y * y;
  CHECK(p == 2 * Rat(1) * x * y);
  CHECK(p.degree() == 2);
  CHECK(p(rv({Rat(3), Rat(5)})) == 30);
  RatMat a(2, 2);
  a << Rat(1), Rat(1), Rat(0), Rat(1);
  const Poly q = p.compose_affine(a, rv({Rat(1), Rat(0)}));
  // x -> x + y + 1, y -> y
  CHECK(q(rv({Rat(2), Rat(3)})) == 2 * 6 * 3);
}

TEST_CASE("degree-2 closed form on random simplices") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.integer(2, 4));
    std::vector<RatVec> v;
    for (int k = 0; k <= n; ++k) {
      RatVec x(n);
      for (int j = 0; j < n; ++j) x(j) = rng.rational(-3, 3, 4);
      v.push_back(x);
    }
    const Simplex s(v);
    if (s.abs_det() == 0) continue;
    const int i = static_cast<int>(rng.integer(0, n - 1)), j = static_cast<int>(rng.integer(0, n - 1));
    CHECK(integrate_simplex(s, Poly::variable(n, i) * Poly::variable(n, j)) == simplex_second_moment(s, i, j));
    CHECK(integrate_simplex(s, Poly::variable(n, i)) == simplex_first_moment(s, i));
  }
}

TEST_CASE("B2 integrals against the slice oracle") {
  const Polytope b = b2();
  CHECK(b.volume() == Rat(28, 3));
  CHECK(slice_volume(b) == Rat(28, 3));
  CHECK(integrate(b, Poly::variable(3, 2)) == -2);
  CHECK(slice_integral(hrep(b), {Rat(0), Rat(1)}) == -2);
  CHECK(integrate(b, Poly::variable(3, 2).pow(2)) == slice_integral(hrep(b), {Rat(0), Rat(0), Rat(1)}));
  CHECK(boundary_integral(b, Poly::constant(3, Rat(1))) == 28);
}
