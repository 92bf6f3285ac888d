#include "toricstab/integrate.hpp"

#include "toricstab/errors.hpp"

#include <algorithm>

namespace toricstab {

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Poly Poly::variable(int nvars, int k) {
  Poly p(nvars);
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e.at(static_cast<std::size_t>(k)) = 1;
  p.add_term(e, Rat(1));
  return p;
}

Poly Poly::affine(const RatVec& a, const Rat& c) {
  const int n = static_cast<int>(a.size());
  Poly p = constant(n, c);
  for (int k = 0; k < n; ++k)
    if (a(k) != 0) p += variable(n, k) * a(k);
  return p;
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void Poly::add_term(const Exponent& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars_) throw Error(ErrorKind::InvalidArgument, "exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat Poly::operator()(const RatVec& x) const {
  if (x.size() != nvars_) throw Error(ErrorKind::InvalidArgument, "evaluation point has wrong dimension");
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int k = 0; k < nvars_; ++k)
      for (int j = 0; j < e[static_cast<std::size_t>(k)]; ++j) t *= x(k);
    total += t;
  }
  return total;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) throw Error(ErrorKind::InvalidArgument, "adding polynomials in different variables");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) throw Error(ErrorKind::InvalidArgument, "subtracting polynomials in different variables");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorKind::InvalidArgument, "multiplying polynomials in different variables");
  Poly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Poly::Exponent e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly Poly::pow(int k) const {
  Poly out = constant(nvars_, Rat(1));
  for (int j = 0; j < k; ++j) out = out * *this;
  return out;
}

Poly Poly::compose(const std::vector<Poly>& subs) const {
  if (static_cast<int>(subs.size()) != nvars_) throw Error(ErrorKind::InvalidArgument, "compose: wrong substitution count");
  const int m = subs.empty() ? 0 : subs[0].nvars();
  // powers[k][j] = subs[k]^j, built on demand
  std::vector<std::vector<Poly>> powers(subs.size());
  auto power = [&](std::size_t k, int j) -> const Poly& {
    auto& pk = powers[k];
    if (pk.empty()) pk.push_back(constant(m, Rat(1)));
    while (static_cast<int>(pk.size()) <= j) pk.push_back(pk.back() * subs[k]);
    return pk[static_cast<std::size_t>(j)];
  };
  Poly out(m);
  for (const auto& [e, c] : terms_) {
    Poly t = constant(m, c);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] > 0) t = t * power(k, e[k]);
    out += t;
  }
  return out;
}

Poly Poly::compose_affine(const RatMat& a, const RatVec& t) const {
  std::vector<Poly> subs;
  for (Eigen::Index k = 0; k < a.rows(); ++k) subs.push_back(affine(a.row(k).transpose(), t(k)));
  return compose(subs);
}

namespace {

Rat factorial(int k) {
  Rat f(1);
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

}  // namespace

Rat integrate_simplex(const Simplex& s, const Poly& p) {
  const int n = s.dim();
  // x = v_0 + sum_j lambda_j (v_j - v_0), lambda ranging over the standard simplex
  RatMat edges(n, n);
  for (int j = 0; j < n; ++j) edges.col(j) = s.vertices()[static_cast<std::size_t>(j + 1)] - s.vertices()[0];
  const Poly q = p.compose_affine(edges, s.vertices()[0]);
  Rat total(0);
  for (const auto& [e, c] : q.terms()) {
    Rat num(1);
    int deg = 0;
    for (int x : e) {
      num *= factorial(x);
      deg += x;
    }
    total += c * num / factorial(n + deg);
  }
  return total * s.abs_det();
}

Rat integrate(const Polytope& p, const Poly& f, Apex apex) {
  if (f.nvars() != p.dim()) throw Error(ErrorKind::InvalidArgument, "integrand dimension mismatch");
  Rat total(0);
  for (const auto& s : triangulate(p, apex)) total += integrate_simplex(s, f);
  return total;
}

RatVec moment_vector(const Polytope& p) {
  const int n = p.dim();
  RatVec m(n);
  for (int k = 0; k < n; ++k) m(k) = integrate(p, Poly::variable(n, k));
  return m;
}

Rat boundary_integral(const Polytope& p, const Poly& f) {
  const int n = p.dim();
  if (f.nvars() != n) throw Error(ErrorKind::InvalidArgument, "integrand dimension mismatch");
  Rat total(0);
  if (n == 1) {
    // facets are points; counting measure (normals are +-1)
    for (const auto& v : p.vertices()) total += f(v);
    return total;
  }
  for (std::size_t i = 0; i < p.halfspaces().size(); ++i) {
    const FacetChart chart = facet_chart(p, i);
    total += chart.scale * integrate(chart.projection, f.compose_affine(chart.lift, chart.offset));
  }
  return total;
}

RatVec boundary_moment_vector(const Polytope& p) {
  const int n = p.dim();
  RatVec m(n);
  for (int k = 0; k < n; ++k) m(k) = boundary_integral(p, Poly::variable(n, k));
  return m;
}

}  // namespace toricstab
