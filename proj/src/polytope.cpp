#include "toricstab/polytope.hpp"

#include "toricstab/combinatorics.hpp"
#include "toricstab/errors.hpp"
#include "toricstab/linalg.hpp"

#include <algorithm>
#include <set>

namespace toricstab {

HalfSpace HalfSpace::canonical(const RatVec& b, const Rat& beta) {
  if (b.isZero()) throw Error(ErrorKind::DegenerateNormal, "half-space normal is the zero vector");
  const Rat s = primitive_scale(b);
  HalfSpace h;
  h.normal.resize(b.size());
  for (Eigen::Index k = 0; k < b.size(); ++k) {
    const BigInt v = numerator(Rat(b(k) * s));
    if (boost::multiprecision::abs(v) > BigInt(std::numeric_limits<long>::max() / 4))
      throw Error(ErrorKind::InvalidArgument, "half-space normal entry too large");
    h.normal(k) = v.convert_to<long>();
  }
  h.rhs = beta * s;
  return h;
}

Rat HalfSpace::eval(const RatVec& x) const {
  Rat s(0);
  for (Eigen::Index k = 0; k < normal.size(); ++k)
    if (normal(k) != 0) s += x(k) * normal(k);
  return s;
}

Simplex::Simplex(std::vector<RatVec> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorKind::InvalidArgument, "simplex without vertices");
  const Eigen::Index n = vertices_[0].size();
  if (static_cast<Eigen::Index>(vertices_.size()) != n + 1)
    throw Error(ErrorKind::InvalidArgument, "simplex needs dim+1 vertices");
  RatMat edges(n, n);
  for (Eigen::Index j = 0; j < n; ++j) edges.col(j) = vertices_[static_cast<std::size_t>(j + 1)] - vertices_[0];
  abs_det_ = boost::multiprecision::abs(determinant(edges));
  if (abs_det_ == 0) throw Error(ErrorKind::DegenerateSpan, "simplex vertices are affinely dependent");
}

Rat Simplex::volume() const {
  Rat f(1);
  for (int k = 2; k <= dim(); ++k) f *= k;
  return abs_det_ / f;
}

namespace {

RatMat rows_of(const std::vector<HalfSpace>& h, const std::vector<std::size_t>& idx, Eigen::Index n) {
  RatMat m(static_cast<Eigen::Index>(idx.size()), n);
  for (std::size_t r = 0; r < idx.size(); ++r) m.row(static_cast<Eigen::Index>(r)) = h[idx[r]].normal_rat().transpose();
  return m;
}

Eigen::Index affine_rank(const std::vector<RatVec>& pts, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return -1;
  const Eigen::Index n = pts[idx[0]].size();
  RatMat m(static_cast<Eigen::Index>(idx.size()) - 1, n);
  for (std::size_t r = 1; r < idx.size(); ++r) m.row(static_cast<Eigen::Index>(r - 1)) = (pts[idx[r]] - pts[idx[0]]).transpose();
  return rank(m);
}

Eigen::Index affine_rank(const std::vector<RatVec>& pts) {
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  return affine_rank(pts, idx);
}

void sort_unique(std::vector<RatVec>& v) {
  std::sort(v.begin(), v.end(), [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
  v.erase(std::unique(v.begin(), v.end(), [](const RatVec& a, const RatVec& b) { return a == b; }), v.end());
}

Eigen::Index common_dim(const std::vector<HalfSpace>& h) {
  if (h.empty()) throw Error(ErrorKind::Unbounded, "no half-spaces given");
  const Eigen::Index n = h[0].normal.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "zero-dimensional half-space");
  for (const auto& hs : h) {
    if (hs.normal.size() != n) throw Error(ErrorKind::InvalidArgument, "half-spaces of mixed dimension");
    if (hs.normal.isZero()) throw Error(ErrorKind::DegenerateNormal, "half-space normal is the zero vector");
  }
  return n;
}

void check_bounded(const std::vector<HalfSpace>& h, Eigen::Index n) {
  // The recession cone {d : L d <= 0} must be {0}: no lineality, and no
  // extreme ray (each would be cut out by n-1 independent tight rows).
  std::vector<std::size_t> all(h.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  const RatMat l = rows_of(h, all, n);
  if (rank(l) < n) throw Error(ErrorKind::Unbounded, "normals do not span the space");
  bool unbounded = false;
  for_each_subset(h.size(), static_cast<std::size_t>(n - 1), [&](const std::vector<std::size_t>& s) {
    const RatMat ns = nullspace(rows_of(h, s, n));
    if (ns.cols() != 1) return true;
    const RatVec d = ns.col(0);
    const RatVec ld = l * d;
    if ((ld.array() <= Rat(0)).all() || (ld.array() >= Rat(0)).all()) {
      unbounded = true;
      return false;
    }
    return true;
  });
  if (unbounded) throw Error(ErrorKind::Unbounded, "system has a recession direction");
}

}  // namespace

std::vector<RatVec> vertices_from_halfspaces(const std::vector<HalfSpace>& h) {
  const Eigen::Index n = common_dim(h);
  check_bounded(h, n);
  std::vector<RatVec> out;
  for_each_subset(h.size(), static_cast<std::size_t>(n), [&](const std::vector<std::size_t>& s) {
    const RatMat a = rows_of(h, s, n);
    if (determinant(a) == 0) return true;
    RatVec b(n);
    for (Eigen::Index r = 0; r < n; ++r) b(r) = h[s[static_cast<std::size_t>(r)]].rhs;
    RatVec x = solve_linear(a, b);
    for (const auto& hs : h)
      if (!hs.contains(x)) return true;
    out.push_back(std::move(x));
    return true;
  });
  sort_unique(out);
  if (out.empty()) throw Error(ErrorKind::Empty, "half-space system is infeasible");
  if (affine_rank(out) < n) throw Error(ErrorKind::NotFullDimensional, "half-space system has empty interior");
  return out;
}

std::vector<HalfSpace> halfspaces_from_vertices(const std::vector<RatVec>& points_in) {
  if (points_in.empty()) throw Error(ErrorKind::Empty, "no points given");
  std::vector<RatVec> pts = points_in;
  sort_unique(pts);
  const Eigen::Index n = pts[0].size();
  for (const auto& p : pts)
    if (p.size() != n) throw Error(ErrorKind::InvalidArgument, "points of mixed dimension");
  if (affine_rank(pts) < n) throw Error(ErrorKind::NotFullDimensional, "points do not affinely span the space");

  std::vector<HalfSpace> out;
  auto seen = [&](const HalfSpace& h) { return std::find(out.begin(), out.end(), h) != out.end(); };
  for_each_subset(pts.size(), static_cast<std::size_t>(n), [&](const std::vector<std::size_t>& s) {
    RatMat m(n - 1, n);
    for (Eigen::Index r = 1; r < n; ++r) m.row(r - 1) = (pts[s[static_cast<std::size_t>(r)]] - pts[s[0]]).transpose();
    const RatMat ns = nullspace(m);
    if (ns.cols() != 1) return true;
    RatVec b = ns.col(0);
    const Rat beta = b.dot(pts[s[0]]);
    bool below = true, above = true;
    for (const auto& q : pts) {
      const Rat v = b.dot(q);
      if (v > beta) below = false;
      if (v < beta) above = false;
      if (!below && !above) return true;
    }
    HalfSpace h = below ? HalfSpace::canonical(b, beta) : HalfSpace::canonical(RatVec(-b), -beta);
    if (!seen(h)) out.push_back(std::move(h));
    return true;
  });
  std::sort(out.begin(), out.end(), [](const HalfSpace& a, const HalfSpace& b) {
    for (Eigen::Index k = 0; k < a.normal.size(); ++k)
      if (a.normal(k) != b.normal(k)) return a.normal(k) > b.normal(k);
    return a.rhs < b.rhs;
  });
  return out;
}

Polytope Polytope::from_halfspaces(std::vector<HalfSpace> h, std::string name) {
  const Eigen::Index n = common_dim(h);
  for (auto& hs : h) hs = HalfSpace::canonical(hs.normal_rat(), hs.rhs);
  Polytope p;
  p.dim_ = static_cast<int>(n);
  p.name_ = std::move(name);
  p.vertices_ = vertices_from_halfspaces(h);
  for (auto& hs : h) {
    if (std::find(p.halfspaces_.begin(), p.halfspaces_.end(), hs) != p.halfspaces_.end()) continue;
    std::vector<std::size_t> tight;
    for (std::size_t v = 0; v < p.vertices_.size(); ++v)
      if (hs.tight(p.vertices_[v])) tight.push_back(v);
    if (affine_rank(p.vertices_, tight) == n - 1) p.halfspaces_.push_back(std::move(hs));
  }
  return p;
}

Polytope Polytope::from_vertices(const std::vector<RatVec>& points, std::string name) {
  return from_halfspaces(halfspaces_from_vertices(points), std::move(name));
}

Polytope Polytope::renamed(std::string name) const {
  Polytope p = *this;
  p.name_ = std::move(name);
  return p;
}

bool Polytope::contains(const RatVec& x) const {
  return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const HalfSpace& h) { return h.contains(x); });
}

std::vector<std::size_t> Polytope::facet_vertices(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (halfspaces_.at(i).tight(vertices_[v])) out.push_back(v);
  return out;
}

Rat Polytope::volume() const {
  Rat v(0);
  for (const auto& s : triangulate(*this)) v += s.volume();
  return v;
}

Polytope polar_dual(const Polytope& p) {
  for (const auto& h : p.halfspaces())
    if (h.rhs <= 0) throw Error(ErrorKind::OriginNotInterior, "origin is not an interior point");
  std::vector<HalfSpace> h;
  for (const auto& b : p.vertices()) h.push_back(HalfSpace::canonical(RatVec(-b), Rat(1)));
  return Polytope::from_halfspaces(std::move(h), p.name().empty() ? std::string() : p.name() + "-dual");
}

std::optional<Polytope> intersect_halfspaces(const Polytope& p, const std::vector<HalfSpace>& extra) {
  std::vector<HalfSpace> h = p.halfspaces();
  h.insert(h.end(), extra.begin(), extra.end());
  try {
    return Polytope::from_halfspaces(std::move(h), p.name());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Empty || e.kind() == ErrorKind::NotFullDimensional) return std::nullopt;
    throw;
  }
}

std::optional<Polytope> intersect_halfspace(const Polytope& p, const RatVec& b, const Rat& beta) {
  if (b.isZero()) {
    if (beta >= 0) return p;
    return std::nullopt;
  }
  return intersect_halfspaces(p, {HalfSpace::canonical(b, beta)});
}

Polytope affine_image(const Polytope& p, const RatMat& a, const RatVec& t) {
  if (determinant(a) == 0) throw Error(ErrorKind::SingularMatrix, "affine_image: map is not invertible");
  std::vector<RatVec> v;
  for (const auto& x : p.vertices()) v.push_back(a * x + t);
  return Polytope::from_vertices(v, p.name());
}

Polytope dilate(const Polytope& p, const Rat& k) {
  if (k <= 0) throw Error(ErrorKind::InvalidArgument, "dilation factor must be positive");
  std::vector<HalfSpace> h = p.halfspaces();
  for (auto& hs : h) hs.rhs *= k;
  return Polytope::from_halfspaces(std::move(h), p.name());
}

namespace {

struct Triangulator {
  const std::vector<RatVec>& verts;
  const std::vector<HalfSpace>& facets;
  Apex apex;
  std::vector<std::vector<bool>> tight;  // tight[facet][vertex]
  std::vector<Simplex> out;

  void run(const std::vector<std::size_t>& face, Eigen::Index d, std::vector<std::size_t>& cone) {
    if (d == 0) {
      std::vector<RatVec> s;
      for (auto i : cone) s.push_back(verts[i]);
      s.push_back(verts[face[0]]);
      out.emplace_back(std::move(s));
      return;
    }
    // vertices are sorted lexicographically, so index order is lex order
    const std::size_t top = apex == Apex::LexMin ? face.front() : face.back();
    std::set<std::vector<std::size_t>> done;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (tight[f][top]) continue;
      std::vector<std::size_t> sub;
      for (auto v : face)
        if (tight[f][v]) sub.push_back(v);
      if (sub.size() < static_cast<std::size_t>(d) || !done.insert(sub).second) continue;
      if (affine_rank(verts, sub) != d - 1) continue;
      cone.push_back(top);
      run(sub, d - 1, cone);
      cone.pop_back();
    }
  }
};

}  // namespace

std::vector<Simplex> triangulate(const Polytope& p, Apex apex) {
  Triangulator t{p.vertices(), p.halfspaces(), apex, {}, {}};
  for (const auto& h : p.halfspaces()) {
    std::vector<bool> row;
    for (const auto& v : p.vertices()) row.push_back(h.tight(v));
    t.tight.push_back(std::move(row));
  }
  std::vector<std::size_t> face(p.vertices().size());
  for (std::size_t k = 0; k < face.size(); ++k) face[k] = k;
  std::vector<std::size_t> cone;
  t.run(face, p.dim(), cone);
  return std::move(t.out);
}

FacetChart facet_chart(const Polytope& p, std::size_t facet) {
  const int n = p.dim();
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "facet_chart needs dimension >= 2");
  const HalfSpace& h = p.halfspaces().at(facet);
  int axis = 0;
  while (axis < n && h.normal(axis) == 0) ++axis;
  if (axis == n) throw Error(ErrorKind::DegenerateNormal, "facet normal is zero");
  const Rat lk(h.normal(axis));

  std::vector<RatVec> pts;
  for (auto v : p.facet_vertices(facet)) {
    RatVec y(n - 1);
    for (int j = 0, c = 0; j < n; ++j)
      if (j != axis) y(c++) = p.vertices()[v](j);
    pts.push_back(std::move(y));
  }
  RatMat lift = RatMat::Zero(n, n - 1);
  RatVec offset = RatVec::Zero(n);
  for (int j = 0, c = 0; j < n; ++j) {
    if (j == axis) continue;
    lift(j, c) = 1;
    lift(axis, c) = Rat(-h.normal(j)) / lk;
    ++c;
  }
  offset(axis) = h.rhs / lk;
  return FacetChart{axis, Polytope::from_vertices(pts), Rat(1) / boost::multiprecision::abs(lk), std::move(lift),
                    std::move(offset)};
}

bool all_rhs_one(const Polytope& p) {
  return std::all_of(p.halfspaces().begin(), p.halfspaces().end(), [](const HalfSpace& h) { return h.rhs == 1; });
}

std::optional<RatVec> reflexive_center(const Polytope& p) {
  const auto& hs = p.halfspaces();
  const int n = p.dim();
  RatMat l(static_cast<Eigen::Index>(hs.size()), n);
  RatVec b(static_cast<Eigen::Index>(hs.size()));
  for (std::size_t r = 0; r < hs.size(); ++r) {
    l.row(static_cast<Eigen::Index>(r)) = hs[r].normal_rat().transpose();
    b(static_cast<Eigen::Index>(r)) = hs[r].rhs - 1;
  }
  // n independent rows pin t down; the rest must agree
  std::vector<Eigen::Index> rows;
  for (Eigen::Index r = 0; r < l.rows() && static_cast<int>(rows.size()) < n; ++r) {
    RatMat m(static_cast<Eigen::Index>(rows.size()) + 1, n);
    for (std::size_t k = 0; k < rows.size(); ++k) m.row(static_cast<Eigen::Index>(k)) = l.row(rows[k]);
    m.row(m.rows() - 1) = l.row(r);
    if (rank(m) == m.rows()) rows.push_back(r);
  }
  RatMat a(n, n);
  RatVec rhs(n);
  for (int k = 0; k < n; ++k) {
    a.row(k) = l.row(rows[static_cast<std::size_t>(k)]);
    rhs(k) = b(rows[static_cast<std::size_t>(k)]);
  }
  const RatVec t = solve_linear(a, rhs);
  if (!is_integral(t) || l * t != b) return std::nullopt;
  return t;
}

Polytope translate(const Polytope& p, const RatVec& t) {
  std::vector<HalfSpace> h = p.halfspaces();
  for (auto& hs : h) hs.rhs += hs.normal_rat().dot(t);
  return Polytope::from_halfspaces(std::move(h), p.name());
}

bool is_lattice_polytope(const Polytope& p) {
  return std::all_of(p.vertices().begin(), p.vertices().end(), [](const RatVec& v) { return is_integral(v); });
}

PolytopeFlags is_reflexive_delzant(const Polytope& p) {
  PolytopeFlags f;
  f.reflexive = all_rhs_one(p) && is_lattice_polytope(p);
  f.delzant = true;
  const Eigen::Index n = p.dim();
  for (const auto& v : p.vertices()) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < p.halfspaces().size(); ++i)
      if (p.halfspaces()[i].tight(v)) tight.push_back(i);
    if (static_cast<Eigen::Index>(tight.size()) != n ||
        boost::multiprecision::abs(determinant(rows_of(p.halfspaces(), tight, n))) != 1) {
      f.delzant = false;
      break;
    }
  }
  return f;
}

}  // namespace toricstab
