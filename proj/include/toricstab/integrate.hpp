#pragma once

#include "toricstab/polytope.hpp"
#include "toricstab/rational.hpp"

#include <map>
#include <vector>

namespace toricstab {

/// Sparse multivariate polynomial over Rat. Zero coefficients are never stored.
class Poly {
 public:
  using Exponent = std::vector<int>;

  explicit Poly(int nvars = 0) : nvars_(nvars) {}
  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int k);
  /// a . x + c
  static Poly affine(const RatVec& a, const Rat& c);

  int nvars() const { return nvars_; }
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rat>& terms() const { return terms_; }

  void add_term(const Exponent& e, const Rat& c);
  Rat operator()(const RatVec& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly pow(int k) const;

  /// p(subs_0(y), ..., subs_{n-1}(y)); every subs_k shares one variable count.
  Poly compose(const std::vector<Poly>& subs) const;
  /// p(A y + t) for an n x m matrix A.
  Poly compose_affine(const RatMat& a, const RatVec& t) const;

  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  int nvars_;
  std::map<Exponent, Rat> terms_;
};

/// Exact integral over a simplex via barycentric expansion and
/// int_S lambda^alpha = n! Vol(S) prod(alpha_j!) / (n + |alpha|)!.
Rat integrate_simplex(const Simplex& s, const Poly& p);

Rat integrate(const Polytope& p, const Poly& f, Apex apex = Apex::LexMin);
RatVec moment_vector(const Polytope& p);

/// Boundary integral with the lattice-normalized measure: on the facet with
/// primitive normal l, dsigma is Euclidean area divided by |l|.
Rat boundary_integral(const Polytope& p, const Poly& f);
RatVec boundary_moment_vector(const Polytope& p);

}  // namespace toricstab
