#pragma once

// Fixtures and independent oracles shared by the test binaries. The oracles
// only use Rat arithmetic and their own elimination, never the library's
// triangulation, vertex enumeration or linear algebra.

#include "toricstab/io.hpp"
#include "toricstab/plfun.hpp"
#include "toricstab/polytope.hpp"
#include "toricstab/stability.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace ts_test {

using namespace toricstab;

inline RatVec rv(std::initializer_list<Rat> xs) {
  RatVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (const auto& x : xs) v(k++) = x;
  return v;
}

inline RatVec rv(const std::vector<std::string>& xs) {
  RatVec v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t k = 0; k < xs.size(); ++k) v(static_cast<Eigen::Index>(k)) = parse_rat(xs[k]);
  return v;
}

inline AffineFn affine(std::initializer_list<Rat> a, const Rat& c) { return {rv(a), c}; }

inline Polytope fan_polytope(const std::vector<std::vector<long>>& rays, std::string name = {}) {
  std::vector<HalfSpace> h;
  for (const auto& r : rays) {
    IntVec v(static_cast<Eigen::Index>(r.size()));
    for (std::size_t k = 0; k < r.size(); ++k) v(static_cast<Eigen::Index>(k)) = -r[k];
    h.push_back({v, Rat(1)});
  }
  return Polytope::from_halfspaces(std::move(h), std::move(name));
}

inline Polytope cube(int n, long r = 1) {
  std::vector<HalfSpace> h;
  for (int k = 0; k < n; ++k) {
    IntVec e = IntVec::Zero(n);
    e(k) = 1;
    h.push_back({e, Rat(r)});
    h.push_back({IntVec(-e), Rat(r)});
  }
  return Polytope::from_halfspaces(std::move(h), "cube");
}

inline Polytope cross_polytope(int n) {
  std::vector<RatVec> v;
  for (int k = 0; k < n; ++k) {
    RatVec e = RatVec::Zero(n);
    e(k) = 1;
    v.push_back(e);
    v.push_back(-e);
  }
  return Polytope::from_vertices(v, "cross");
}

/// Moment polytope of CP^n: x_k >= -1, sum x_k <= 1.
inline Polytope cpn(int n) {
  std::vector<std::vector<long>> rays;
  for (int k = 0; k < n; ++k) {
    std::vector<long> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(k)] = 1;
    rays.push_back(e);
  }
  rays.push_back(std::vector<long>(static_cast<std::size_t>(n), -1));
  return fan_polytope(rays, "CP");
}

inline Polytope b1() { return fan_polytope({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, -1}, {-1, -1, -2}}, "B1"); }
inline Polytope b2() { return fan_polytope({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, -1}, {-1, -1, -1}}, "B2"); }

inline std::vector<RatVec> sorted(std::vector<RatVec> v) {
  std::sort(v.begin(), v.end(), [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
  return v;
}

// ---------------------------------------------------------------------------
// randomness (fixed seeds only)

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  Rat rational(long lo, long hi, long den) { return Rat(integer(lo * den, hi * den), den); }
};

inline std::optional<Polytope> try_from_vertices(const std::vector<RatVec>& pts) {
  try {
    return Polytope::from_vertices(pts);
  } catch (const Error&) {
    return std::nullopt;
  }
}

/// Hull of a handful of random integer points; retried until full-dimensional.
inline Polytope random_polytope(Rng& rng, int n, long box = 3) {
  for (;;) {
    std::vector<RatVec> pts;
    const long m = rng.integer(n + 1, n + 6);
    for (long k = 0; k < m; ++k) {
      RatVec x(n);
      for (int j = 0; j < n; ++j) x(j) = rng.integer(-box, box);
      pts.push_back(x);
    }
    if (auto p = try_from_vertices(pts)) return *p;
  }
}

inline AffineFn random_affine(Rng& rng, int n, long box = 2) {
  RatVec a(n);
  for (int j = 0; j < n; ++j) a(j) = rng.integer(-box, box);
  return {a, Rat(rng.integer(-box, box))};
}

/// max of 2-3 random integer affine pieces
inline PLFn random_convex(Rng& rng, int n) {
  PLFn u{{}, PLMode::Convex};
  const long m = rng.integer(2, 3);
  for (long k = 0; k < m; ++k) u.pieces.push_back(random_affine(rng, n));
  return u;
}

/// Product of random elementary matrices and a signed permutation: det = +-1.
inline RatMat random_unimodular(Rng& rng, int n) {
  RatMat a = RatMat::Identity(n, n);
  for (int step = 0; step < 6; ++step) {
    const long i = rng.integer(0, n - 1);
    long j = rng.integer(0, n - 2);
    if (j >= i) ++j;
    RatMat e = RatMat::Identity(n, n);
    e(i, j) = rng.integer(-1, 1);
    a = e * a;
  }
  if (rng.integer(0, 1)) a.row(0) = -a.row(0);
  return a;
}

// ---------------------------------------------------------------------------
// oracles

/// Plain Gauss-Jordan on a copy; nullopt when singular.
inline std::optional<RatVec> gauss_solve(RatMat a, RatVec b) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return std::nullopt;
    a.row(c).swap(a.row(piv));
    std::swap(b(c), b(piv));
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rat f = a(r, c) / a(c, c);
      a.row(r) -= f * a.row(c);
      b(r) -= f * b(c);
    }
  }
  RatVec x(n);
  for (Eigen::Index k = 0; k < n; ++k) x(k) = b(k) / a(k, k);
  return x;
}

/// {x : A x <= b}
struct HRep {
  RatMat a;
  RatVec b;
};

inline HRep hrep(const Polytope& p) {
  const auto& hs = p.halfspaces();
  HRep h{RatMat(static_cast<Eigen::Index>(hs.size()), p.dim()), RatVec(static_cast<Eigen::Index>(hs.size()))};
  for (std::size_t r = 0; r < hs.size(); ++r) {
    h.a.row(static_cast<Eigen::Index>(r)) = hs[r].normal_rat().transpose();
    h.b(static_cast<Eigen::Index>(r)) = hs[r].rhs;
  }
  return h;
}

/// All feasible basic solutions, by brute force over row subsets.
inline std::vector<RatVec> brute_vertices(const HRep& h) {
  const Eigen::Index n = h.a.cols(), m = h.a.rows();
  std::vector<RatVec> out;
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, Eigen::Index start, Eigen::Index depth) -> void {
    if (depth == n) {
      RatMat a(n, n);
      RatVec b(n);
      for (Eigen::Index k = 0; k < n; ++k) {
        a.row(k) = h.a.row(idx[static_cast<std::size_t>(k)]);
        b(k) = h.b(idx[static_cast<std::size_t>(k)]);
      }
      auto x = gauss_solve(a, b);
      if (!x) return;
      for (Eigen::Index r = 0; r < m; ++r)
        if (h.a.row(r).dot(*x) > h.b(r)) return;
      if (std::find(out.begin(), out.end(), *x) == out.end()) out.push_back(*x);
      return;
    }
    for (Eigen::Index r = start; r < m; ++r) {
      idx[static_cast<std::size_t>(depth)] = r;
      self(self, r + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Exact quadrature weights for the equally spaced nodes lo + k (hi - lo) / (m - 1).
inline std::vector<Rat> newton_cotes(const Rat& lo, const Rat& hi, int m) {
  RatMat v(m, m);
  RatVec mom(m);
  std::vector<Rat> t(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) t[static_cast<std::size_t>(k)] = lo + (hi - lo) * Rat(k, m - 1);
  Rat plo(lo), phi(hi);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      Rat pw(1);
      for (int e = 0; e < j; ++e) pw *= t[static_cast<std::size_t>(k)];
      v(j, k) = pw;
    }
    mom(j) = (phi - plo) / Rat(j + 1);
    plo *= lo;
    phi *= hi;
  }
  auto w = gauss_solve(v, mom);
  return {w->begin(), w->end()};
}

/// int over {A x <= b} of q(x_n) dx with q a univariate polynomial (ascending
/// coefficients), by slicing along the last axis and integrating the exact
/// piecewise polynomial slice volume with Newton-Cotes on each piece.
inline Rat slice_integral(const HRep& h, const std::vector<Rat>& q = {Rat(1)}) {
  const Eigen::Index n = h.a.cols();
  if (n == 1) {
    std::optional<Rat> lo, hi;
    for (Eigen::Index r = 0; r < h.a.rows(); ++r) {
      const Rat& a = h.a(r, 0);
      if (a == 0) {
        if (h.b(r) < 0) return 0;
        continue;
      }
      const Rat bound = h.b(r) / a;
      if (a > 0) hi = hi ? std::min(*hi, bound) : bound;
      else lo = lo ? std::max(*lo, bound) : bound;
    }
    if (!lo || !hi) throw std::logic_error("slice_integral: unbounded slice");
    if (*hi <= *lo) return 0;
    // int_lo^hi q(t) dt
    Rat total(0);
    for (std::size_t j = 0; j < q.size(); ++j) {
      Rat ph(1), pl(1);
      for (std::size_t e = 0; e <= j; ++e) {
        ph *= *hi;
        pl *= *lo;
      }
      total += q[j] * (ph - pl) / Rat(static_cast<long>(j) + 1);
    }
    return total;
  }
  const auto verts = brute_vertices(h);
  std::vector<Rat> levels;
  for (const auto& v : verts) levels.push_back(v(n - 1));
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  auto slice_volume = [&](const Rat& t) {
    HRep s{h.a.leftCols(n - 1), h.b - h.a.col(n - 1) * t};
    return slice_integral(s);
  };
  const int m = static_cast<int>(n - 1 + static_cast<Eigen::Index>(q.size()) - 1) + 1;  // nodes for exactness
  const int nodes = std::max(m, 2);
  Rat total(0);
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    const auto w = newton_cotes(levels[k], levels[k + 1], nodes);
    for (int j = 0; j < nodes; ++j) {
      const Rat t = levels[k] + (levels[k + 1] - levels[k]) * Rat(j, nodes - 1);
      Rat qt(0), pw(1);
      for (const auto& c : q) {
        qt += c * pw;
        pw *= t;
      }
      total += w[static_cast<std::size_t>(j)] * qt * slice_volume(t);
    }
  }
  return total;
}

inline Rat slice_volume(const Polytope& p) { return slice_integral(hrep(p)); }

/// int_S x_i x_j over a simplex, closed form:
/// Vol / ((n+1)(n+2)) * (sum_k v_ki v_kj + (sum_k v_ki)(sum_k v_kj)).
inline Rat simplex_second_moment(const Simplex& s, int i, int j) {
  const auto& v = s.vertices();
  const long n = s.dim();
  Rat sq(0), si(0), sj(0);
  for (const auto& x : v) {
    sq += x(i) * x(j);
    si += x(i);
    sj += x(j);
  }
  return s.volume() / Rat((n + 1) * (n + 2)) * (sq + si * sj);
}

inline Rat simplex_first_moment(const Simplex& s, int i) {
  Rat sum(0);
  for (const auto& x : s.vertices()) sum += x(i);
  return s.volume() * sum / Rat(static_cast<long>(s.vertices().size()));
}

/// Direct lattice count over the bounding box, without the library scan.
inline long brute_count(const Polytope& p, long t, bool interior = false) {
  const int n = p.dim();
  RatVec lo = p.vertices()[0] * Rat(t), hi = lo;
  for (const auto& v : p.vertices())
    for (int k = 0; k < n; ++k) {
      lo(k) = std::min(lo(k), Rat(v(k) * Rat(t)));
      hi(k) = std::max(hi(k), Rat(v(k) * Rat(t)));
    }
  std::vector<long> l(static_cast<std::size_t>(n)), u(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    l[static_cast<std::size_t>(k)] = ceil(lo(k)).convert_to<long>();
    u[static_cast<std::size_t>(k)] = floor(hi(k)).convert_to<long>();
  }
  long count = 0;
  std::vector<long> x(l);
  for (;;) {
    RatVec pt(n);
    for (int k = 0; k < n; ++k) pt(k) = x[static_cast<std::size_t>(k)];
    bool inside = true;
    for (const auto& h : p.halfspaces()) {
      const Rat e = h.eval(pt), r = h.rhs * Rat(t);
      if (interior ? e >= r : e > r) {
        inside = false;
        break;
      }
    }
    if (inside) ++count;
    int k = 0;
    while (k < n && x[static_cast<std::size_t>(k)] == u[static_cast<std::size_t>(k)]) {
      x[static_cast<std::size_t>(k)] = l[static_cast<std::size_t>(k)];
      ++k;
    }
    if (k == n) break;
    ++x[static_cast<std::size_t>(k)];
  }
  return count;
}

/// Transformed extremal function: theta'(y) = theta(A^{-1}(y - t)).
inline AffineFn push_forward(const AffineFn& f, const RatMat& a, const RatVec& t) {
  RatMat inv = RatMat::Identity(a.rows(), a.cols());
  for (Eigen::Index c = 0; c < a.cols(); ++c) inv.col(c) = *gauss_solve(a, inv.col(c));
  return f.pullback(inv, RatVec(-inv * t));
}

}  // namespace ts_test
