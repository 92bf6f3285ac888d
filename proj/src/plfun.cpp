#include "toricstab/plfun.hpp"

#include "toricstab/errors.hpp"
#include "toricstab/linalg.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace toricstab {

AffineFn AffineFn::coordinate(int n, int k) {
  AffineFn f = zero(n);
  f.a(k) = 1;
  return f;
}

AffineFn AffineFn::pullback(const RatMat& lift, const RatVec& offset) const {
  return {lift.transpose() * a, a.dot(offset) + c};
}

std::string AffineFn::to_string() const {
  std::string out;
  auto term = [&](const Rat& v, const std::string& var) {
    if (v == 0) return;
    const bool neg = v < 0;
    const Rat mag = neg ? Rat(-v) : v;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (var.empty())
      out += toricstab::to_string(mag);
    else
      out += (mag == 1 ? std::string() : toricstab::to_string(mag) + "*") + var;
  };
  for (Eigen::Index k = 0; k < a.size(); ++k) term(a(k), "x" + std::to_string(k + 1));
  term(c, "");
  return out.empty() ? "0" : out;
}

PLFn PLFn::simple(const AffineFn& f) {
  return {{AffineFn::zero(f.dim()), f}, PLMode::Convex};
}

Rat PLFn::operator()(const RatVec& x) const {
  Rat best = pieces.at(0)(x);
  for (std::size_t k = 1; k < pieces.size(); ++k) {
    const Rat v = pieces[k](x);
    if (mode == PLMode::Convex ? v > best : v < best) best = v;
  }
  return best;
}

PLFn PLFn::plus(const AffineFn& f) const {
  PLFn out = *this;
  for (auto& p : out.pieces) p = p + f;
  return out;
}

PLFn PLFn::scaled(const Rat& k) const {
  if (k <= 0) throw Error(ErrorKind::InvalidArgument, "PL scaling factor must be positive");
  PLFn out = *this;
  for (auto& p : out.pieces) p = p * k;
  return out;
}

namespace {

std::vector<AffineFn> distinct_pieces(const PLFn& u) {
  std::vector<AffineFn> out;
  for (const auto& f : u.pieces)
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  return out;
}

}  // namespace

std::vector<Region> linearity_regions(const Polytope& p, const PLFn& u) {
  if (u.pieces.empty()) throw Error(ErrorKind::InvalidArgument, "PL function without pieces");
  if (u.dim() != p.dim()) throw Error(ErrorKind::InvalidArgument, "PL function dimension mismatch");
  const auto pieces = distinct_pieces(u);
  std::vector<Region> out;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    // Convex: f_j - f_k <= 0; Concave: f_k - f_j <= 0
    std::vector<HalfSpace> extra;
    bool dominated = false;
    for (std::size_t j = 0; j < pieces.size() && !dominated; ++j) {
      if (j == k) continue;
      const AffineFn d = u.mode == PLMode::Convex ? pieces[j] - pieces[k] : pieces[k] - pieces[j];
      if (d.a.isZero()) {
        dominated = d.c > 0;
        continue;
      }
      extra.push_back(HalfSpace::canonical(d.a, -d.c));
    }
    if (dominated) continue;
    auto cell = intersect_halfspaces(p, extra);
    if (cell) out.push_back({std::move(*cell), pieces[k]});
  }
  return out;
}

Rat integrate_pl(const Polytope& p, const Poly& f, const PLFn& u) {
  Rat total(0);
  for (const auto& r : linearity_regions(p, u)) total += integrate(r.cell, f * r.piece.poly());
  return total;
}

Rat boundary_integrate_pl(const Polytope& p, const Poly& f, const PLFn& u) {
  Rat total(0);
  if (p.dim() == 1) {
    for (const auto& v : p.vertices()) total += f(v) * u(v);
    return total;
  }
  for (std::size_t i = 0; i < p.halfspaces().size(); ++i) {
    const FacetChart chart = facet_chart(p, i);
    PLFn restricted{{}, u.mode};
    for (const auto& piece : u.pieces) restricted.pieces.push_back(piece.pullback(chart.lift, chart.offset));
    total += chart.scale * integrate_pl(chart.projection, f.compose_affine(chart.lift, chart.offset), restricted);
  }
  return total;
}

namespace {

Eigen::Index span_rank(const std::vector<RatVec>& pts) {
  if (pts.empty()) return -1;
  RatMat m(static_cast<Eigen::Index>(pts.size()) - 1, pts[0].size());
  for (std::size_t r = 1; r < pts.size(); ++r) m.row(static_cast<Eigen::Index>(r - 1)) = (pts[r] - pts[0]).transpose();
  return rank(m);
}

struct HullSearch {
  const std::vector<std::pair<RatVec, Rat>>& nodes;

  std::vector<RatVec> contact(const AffineFn& f) const {
    std::vector<RatVec> t;
    for (const auto& [q, phi] : nodes)
      if (f(q) == phi) t.push_back(q);
    return t;
  }

  // Rotates f about {h = 0} until it first touches a node with h < 0.
  AffineFn rotate(const AffineFn& f, const AffineFn& h) const {
    std::optional<Rat> best;
    for (const auto& [q, phi] : nodes) {
      const Rat hq = h(q);
      if (hq >= 0) continue;
      const Rat t = (f(q) - phi) / -hq;
      if (!best || t < *best) best = t;
    }
    return f + h * *best;
  }

  bool has_negative(const AffineFn& h) const {
    return std::any_of(nodes.begin(), nodes.end(), [&](const auto& nd) { return h(nd.first) < 0; });
  }
};

std::string key(const AffineFn& f) {
  return to_string(f.a) + "|" + to_string(f.c);
}

}  // namespace

PLFn upper_hull(const std::vector<std::pair<RatVec, Rat>>& nodes) {
  if (nodes.empty()) throw Error(ErrorKind::DegenerateSpan, "upper_hull: no nodes");
  const int n = static_cast<int>(nodes[0].first.size());
  std::vector<RatVec> pts;
  for (const auto& nd : nodes) pts.push_back(nd.first);
  if (span_rank(pts) < n) throw Error(ErrorKind::DegenerateSpan, "upper_hull: nodes do not span the space");
  HullSearch hs{nodes};

  // start horizontal at the top node(s) and tilt until the contact set is full-dimensional
  Rat top = nodes[0].second;
  for (const auto& nd : nodes)
    if (nd.second > top) top = nd.second;
  AffineFn f{RatVec::Zero(n), top};
  for (auto t = hs.contact(f); span_rank(t) < n; t = hs.contact(f)) {
    RatMat dirs(static_cast<Eigen::Index>(t.size()) - 1, n);
    for (std::size_t r = 1; r < t.size(); ++r) dirs.row(static_cast<Eigen::Index>(r - 1)) = (t[r] - t[0]).transpose();
    const RatMat normals = nullspace(dirs);
    bool moved = false;
    for (Eigen::Index c = 0; c < normals.cols() && !moved; ++c) {
      AffineFn h{normals.col(c), -normals.col(c).dot(t[0])};
      if (!hs.has_negative(h)) h = h * Rat(-1);
      if (!hs.has_negative(h)) continue;
      f = hs.rotate(f, h);
      moved = true;
    }
    if (!moved) throw Error(ErrorKind::DegenerateSpan, "upper_hull: cannot tilt supporting plane");
  }

  std::vector<AffineFn> facets;
  std::set<std::string> seen{key(f)};
  std::deque<AffineFn> queue{f};
  while (!queue.empty()) {
    const AffineFn cur = queue.front();
    queue.pop_front();
    facets.push_back(cur);
    for (const auto& ridge : halfspaces_from_vertices(hs.contact(cur))) {
      const AffineFn h{-ridge.normal_rat(), ridge.rhs};  // >= 0 on this cell, 0 on the ridge
      if (!hs.has_negative(h)) continue;                  // ridge on the boundary of the node hull
      AffineFn next = hs.rotate(cur, h);
      if (seen.insert(key(next)).second) queue.push_back(std::move(next));
    }
  }
  std::sort(facets.begin(), facets.end(), [](const AffineFn& a, const AffineFn& b) {
    if (a.a != b.a) return lex_less(a.a, b.a);
    return a.c < b.c;
  });
  return {facets, PLMode::Concave};
}

bool degeneration_is_lattice(const Polytope& p, const PLFn& u, long i, const Rat& r) {
  if (u.mode != PLMode::Convex) throw Error(ErrorKind::InvalidArgument, "degeneration needs a convex PL function");
  if (i <= 0) throw Error(ErrorKind::InvalidArgument, "dilation must be positive");
  for (const auto& v : p.vertices())
    if (u(v) >= r) throw Error(ErrorKind::InvalidArgument, "R must exceed max u on the polytope");
  const int n = p.dim();
  std::vector<HalfSpace> h;
  for (const auto& hs : p.halfspaces()) {
    RatVec l = RatVec::Zero(n + 1);
    l.head(n) = hs.normal_rat();
    h.push_back(HalfSpace::canonical(l, hs.rhs));
  }
  RatVec down = RatVec::Zero(n + 1);
  down(n) = -1;
  h.push_back(HalfSpace::canonical(down, Rat(0)));
  for (const auto& f : distinct_pieces(u)) {
    RatVec l(n + 1);
    l.head(n) = f.a;
    l(n) = 1;
    h.push_back(HalfSpace::canonical(l, r - f.c));
  }
  const Polytope q = Polytope::from_halfspaces(std::move(h));
  return std::all_of(q.vertices().begin(), q.vertices().end(),
                     [&](const RatVec& v) { return is_integral(RatVec(v * Rat(i))); });
}

}  // namespace toricstab
