#include "toricstab/stability.hpp"

#include "toricstab/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace toricstab {

const char* to_string(KClass k) {
  switch (k) {
    case KClass::Stable: return "stable";
    case KClass::UnstableByCriterion: return "unstable (integral criterion)";
    case KClass::UnstableByWitness: return "unstable (searched witness)";
    case KClass::Undetermined: return "undetermined";
  }
  return "?";
}

const char* to_string(Eq18Status s) {
  switch (s) {
    case Eq18Status::Holds: return "holds";
    case Eq18Status::AnyS: return "any-s";
    case Eq18Status::Fails: return "fails";
  }
  return "?";
}

Rat average_scalar(const Polytope& p) {
  const int n = p.dim();
  return boundary_integral(p, Poly::constant(n, Rat(1))) / p.volume();
}

ExtremalData extremal_affine(const Polytope& p) {
  const int n = p.dim();
  const auto cells = triangulate(p);
  auto integral = [&](const Poly& f) {
    Rat s(0);
    for (const auto& c : cells) s += integrate_simplex(c, f);
    return s;
  };
  ExtremalData ed;
  ed.volume = integral(Poly::constant(n, Rat(1)));
  ed.boundary_volume = boundary_integral(p, Poly::constant(n, Rat(1)));
  ed.sbar = ed.boundary_volume / ed.volume;
  ed.moments = RatVec(n);
  for (int k = 0; k < n; ++k) ed.moments(k) = integral(Poly::variable(n, k));
  ed.boundary_moments = boundary_moment_vector(p);

  ed.gram = RatMat(n + 1, n + 1);
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) ed.gram(j, k) = ed.gram(k, j) = integral(Poly::variable(n, j) * Poly::variable(n, k));
  for (int k = 0; k < n; ++k) ed.gram(k, n) = ed.gram(n, k) = ed.moments(k);
  ed.gram(n, n) = ed.volume;

  ed.rhs = RatVec(n + 1);
  for (int k = 0; k < n; ++k) ed.rhs(k) = ed.boundary_moments(k) - ed.sbar * ed.moments(k);
  ed.rhs(n) = ed.boundary_volume - ed.sbar * ed.volume;  // zero by the choice of sbar

  // Gram matrix of {x_1..x_n, 1} in L^2(P): invertible for full-dimensional P
  const RatVec sol = solve_linear(ed.gram, ed.rhs);
  ed.theta = AffineFn{sol.head(n), sol(n)};
  return ed;
}

Rat futaki(const Polytope& p, int k) {
  const int n = p.dim();
  const Rat sbar = average_scalar(p);
  return boundary_integral(p, Poly::variable(n, k)) - sbar * integrate(p, Poly::variable(n, k));
}

RatVec futaki_vector(const ExtremalData& ed) {
  return ed.boundary_moments - ed.moments * ed.sbar;
}

Rat l_functional(const Polytope& p, const ExtremalData& ed, const PLFn& u) {
  const int n = p.dim();
  const Poly weight = Poly::constant(n, ed.sbar) + ed.theta.poly();
  return boundary_integrate_pl(p, Poly::constant(n, Rat(1)), u) - integrate_pl(p, weight, u);
}

Rat l_functional_by_parts(const Polytope& p, const ExtremalData& ed, const PLFn& u) {
  if (!all_rhs_one(p)) throw Error(ErrorKind::NotReflexive, "by-parts form needs every rhs equal to 1");
  const int n = p.dim();
  const Poly one_minus_theta = Poly::constant(n, Rat(1)) - ed.theta.poly();
  Rat total(0);
  // on a cell where u = a.x + c, x . grad u - u = -c
  for (const auto& r : linearity_regions(p, u))
    total += integrate(r.cell, Poly::constant(n, -r.piece.c) + one_minus_theta * r.piece.poly());
  return total;
}

namespace {

std::vector<RatVec> search_directions(const Polytope& p, const ExtremalData& ed, const SearchGrid& grid) {
  const int n = p.dim();
  std::vector<RatVec> raw;
  if (!ed.theta.a.isZero()) raw.push_back(ed.theta.a);
  for (const auto& h : p.halfspaces()) raw.push_back(h.normal_rat());
  for (const auto& v : p.vertices())
    if (!v.isZero()) raw.push_back(v);
  if (grid.box > 0) {
    IntVec z = IntVec::Constant(n, -grid.box);
    while (true) {
      if (!z.isZero()) raw.push_back(to_rat(z));
      int k = n - 1;
      while (k >= 0 && z(k) == grid.box) z(k--) = -grid.box;
      if (k < 0) break;
      ++z(k);
    }
  }
  std::vector<RatVec> out;
  std::set<std::string> seen;
  for (const auto& r : raw)
    for (int sign : {1, -1}) {
      const RatVec d = to_rat(primitive_integer_direction(RatVec(r * Rat(sign))));
      if (seen.insert(to_string(d)).second) out.push_back(d);
    }
  return out;
}

}  // namespace

SearchResult destabilizer_search(const Polytope& p, const ExtremalData& ed, const SearchGrid& grid) {
  SearchResult res;
  const bool by_parts = all_rhs_one(p);
  for (const auto& b : search_directions(p, ed, grid)) {
    Rat lo = b.dot(p.vertices()[0]), hi = lo;
    std::vector<Rat> values;
    for (const auto& v : p.vertices()) {
      const Rat t = b.dot(v);
      values.push_back(t);
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
    std::vector<Rat> levels;
    for (int j = 1; j <= grid.offsets; ++j) levels.push_back(lo + (hi - lo) * Rat(j, grid.offsets + 1));
    for (const auto& t : values)
      if (lo < t && t < hi) levels.push_back(t);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    for (const auto& level : levels) {
      const PLFn u = PLFn::simple(AffineFn{b, -level});
      ++res.evaluated;
      const Rat value = by_parts ? l_functional_by_parts(p, ed, u) : l_functional(p, ed, u);
      if (value < 0) {
        const Rat check = l_functional(p, ed, u);
        if (check != value) throw std::logic_error("L functional: the two forms disagree");
        res.witness = u;
        res.value = check;
        return res;
      }
    }
  }
  return res;
}

KVerdict k_classify(const Polytope& p, const SearchGrid& grid) {
  return k_classify(p, extremal_affine(p), grid);
}

namespace {

KVerdict classify_anticanonical(const Polytope& p, const ExtremalData& ed, const SearchGrid& grid);

}  // namespace

KVerdict k_classify(const Polytope& p, const ExtremalData& ed, const SearchGrid& grid) {
  if (all_rhs_one(p)) return classify_anticanonical(p, ed, grid);
  // integer translates of an anticanonical polytope: classify at the center and move back
  const auto t = reflexive_center(p);
  if (!t) throw Error(ErrorKind::NotReflexive, "classification needs every rhs equal to 1 (up to a lattice translation)");
  const Polytope q = translate(p, RatVec(-*t));
  KVerdict v = classify_anticanonical(q, extremal_affine(q), grid);
  const RatMat id = RatMat::Identity(p.dim(), p.dim());
  if (v.negative_part) v.negative_part = translate(*v.negative_part, *t);
  if (v.witness)
    for (auto& f : v.witness->pieces) f = f.pullback(id, RatVec(-*t));
  return v;
}

namespace {

KVerdict classify_anticanonical(const Polytope& p, const ExtremalData& ed, const SearchGrid& grid) {
  const int n = p.dim();
  KVerdict v;
  const AffineFn& th = ed.theta;
  // theta >= 1  <=>  -a.x <= c - 1
  v.negative_part = intersect_halfspace(p, RatVec(-th.a), th.c - 1);
  if (!v.negative_part) {
    v.cls = KClass::Stable;
    return v;
  }
  const Polytope& neg = *v.negative_part;
  const Poly one_minus_theta = Poly::constant(n, Rat(1)) - th.poly();
  v.negative_volume = neg.volume();
  v.negative_integral = integrate(neg, one_minus_theta.pow(2));
  v.lhs = Rat(1) - th.c;
  v.rhs = v.negative_integral / v.negative_volume;
  if (*v.lhs < *v.rhs) {
    v.cls = KClass::UnstableByCriterion;
    v.witness = PLFn::simple(th - AffineFn{RatVec::Zero(n), Rat(1)});
    v.witness_value = l_functional(p, ed, *v.witness);
    if (!(*v.witness_value < 0)) throw std::logic_error("criterion witness does not destabilize");
    return v;
  }
  const SearchResult s = destabilizer_search(p, ed, grid);
  v.searched = s.evaluated;
  if (s.witness) {
    v.cls = KClass::UnstableByWitness;
    v.witness = s.witness;
    v.witness_value = s.value;
  } else {
    v.cls = KClass::Undetermined;
  }
  return v;
}

}  // namespace

ThetaNodes theta_nodes(const Polytope& p, const ExtremalData& ed, long i, bool divided) {
  ThetaNodes t;
  t.i = i;
  t.divided = divided;
  t.nodes = refined_points(p, i);
  if (t.nodes.empty()) throw Error(ErrorKind::Empty, "no refined lattice points");
  Rat sum(0);
  for (const auto& a : t.nodes) {
    t.theta.push_back(ed.theta(a));
    sum += t.theta.back();
  }
  t.mean = sum / Rat(static_cast<long>(t.nodes.size()));
  t.spread = 0;
  for (const auto& th : t.theta) {
    const Rat d = th - t.mean;
    t.spread += d * d;
    t.centered.push_back(divided ? d / Rat(i) : d);
  }
  return t;
}

std::optional<Rat> s_closed_form(const ThetaNodes& t) {
  if (t.spread == 0) return std::nullopt;
  return -Rat(t.i) * t.mean * Rat(static_cast<long>(t.nodes.size())) / t.spread;
}

std::optional<Rat> s_closed_form(const Polytope& p, const ExtremalData& ed, long i) {
  return s_closed_form(theta_nodes(p, ed, i));
}

Eq18Status ChowCheck::status() const {
  if (std::holds_alternative<AnyS>(solution)) return Eq18Status::AnyS;
  if (std::holds_alternative<NoSolution>(solution)) return Eq18Status::Fails;
  return Eq18Status::Holds;
}

std::optional<Rat> ChowCheck::s() const {
  if (const Rat* s = std::get_if<Rat>(&solution)) return *s;
  return std::nullopt;
}

namespace {

ChowCheck chow_from_nodes(const ExtremalData& ed, const ThetaNodes& t) {
  const Eigen::Index n = ed.moments.size();
  ChowCheck c;
  c.i = t.i;
  c.count = static_cast<long>(t.nodes.size());
  c.lattice_sum = RatVec::Zero(n);
  c.coeffs = RatVec::Zero(n);
  for (std::size_t k = 0; k < t.nodes.size(); ++k) {
    c.lattice_sum += t.nodes[k];
    if (t.centered[k] != 0) c.coeffs += t.nodes[k] * t.centered[k];
  }
  c.rhs = ed.moments * (Rat(c.count) / ed.volume) - c.lattice_sum;
  c.solution = solve_overdetermined_1d(c.coeffs, c.rhs);
  return c;
}

Rat q_from_nodes(const Polytope& p, const ExtremalData& ed, const ThetaNodes& t, const PLFn& g, const Rat& s) {
  const int n = p.dim();
  Rat node_sum(0);
  for (std::size_t k = 0; k < t.nodes.size(); ++k) node_sum += (Rat(1) + s * t.centered[k]) * g(t.nodes[k]);
  return Rat(static_cast<long>(t.nodes.size())) * integrate_pl(p, Poly::constant(n, Rat(1)), g) - ed.volume * node_sum;
}

Rat p_from_nodes(const Polytope& p, const Rat& vol, const std::vector<RatVec>& nodes, const PLFn& u) {
  const int n = p.dim();
  Rat node_sum(0);
  for (const auto& a : nodes) node_sum += u(a);
  return Rat(static_cast<long>(nodes.size())) * integrate_pl(p, Poly::constant(n, Rat(1)), u) - vol * node_sum;
}

}  // namespace

ChowCheck chow_necessary(const Polytope& p, const ExtremalData& ed, long i, bool divided) {
  return chow_from_nodes(ed, theta_nodes(p, ed, i, divided));
}

Rat q_weight_with_s(const Polytope& p, const ExtremalData& ed, long i, const PLFn& g, const Rat& s) {
  return q_from_nodes(p, ed, theta_nodes(p, ed, i), g, s);
}

Rat q_weight(const Polytope& p, const ExtremalData& ed, long i, const PLFn& g) {
  const ThetaNodes t = theta_nodes(p, ed, i);
  const ChowCheck c = chow_from_nodes(ed, t);
  if (c.status() == Eq18Status::Fails)
    throw Error(ErrorKind::PreconditionFailed, "balancing system has no solution at i = " + std::to_string(i));
  return q_from_nodes(p, ed, t, g, c.s().value_or(Rat(0)));
}

PWeight p_weight(const Polytope& p, long i, const PLFn& u, const Rat& r) {
  const auto nodes = refined_points(p, i);
  const Rat vol = p.volume();
  PWeight w;
  w.value = p_from_nodes(p, vol, nodes, u);
  // R - u gives -P: the height R of the degeneration drops out
  PLFn flipped{{}, u.mode == PLMode::Convex ? PLMode::Concave : PLMode::Convex};
  for (const auto& f : u.pieces) flipped.pieces.push_back(AffineFn{RatVec(-f.a), r - f.c});
  if (p_from_nodes(p, vol, nodes, flipped) != -w.value) throw std::logic_error("p_weight depends on R");
  w.lattice = u.mode == PLMode::Convex && degeneration_is_lattice(p, u, i, r);
  return w;
}

Projection project_perp(const Polytope& p, const ExtremalData& ed, long i, const PLFn& u) {
  const ThetaNodes t = theta_nodes(p, ed, i);
  if (t.spread == 0) throw Error(ErrorKind::ThetaConstant, "theta is constant on the nodes");
  const int n = p.dim();
  Projection pr;
  Rat dot(0), node_sum(0);
  std::vector<Rat> uvals;
  for (const auto& a : t.nodes) uvals.push_back(u(a));
  for (std::size_t k = 0; k < t.nodes.size(); ++k) dot += uvals[k] * (t.theta[k] - t.mean);
  pr.kappa = dot / t.spread;
  pr.perp_residual = 0;
  for (std::size_t k = 0; k < t.nodes.size(); ++k) {
    const Rat d = t.theta[k] - t.mean;
    pr.values.push_back(uvals[k] - pr.kappa * d);
    pr.perp_residual += pr.values.back() * d;
    node_sum += pr.values.back();
  }
  // int tilde u = int u - kappa (int theta - bar theta Vol)
  const Rat int_theta = ed.theta.a.dot(ed.moments) + ed.theta.c * ed.volume;
  const Rat int_u = integrate_pl(p, Poly::constant(n, Rat(1)), u);
  const Rat count(static_cast<long>(t.nodes.size()));
  pr.p_tilde = count * (int_u - pr.kappa * (int_theta - t.mean * ed.volume)) - ed.volume * node_sum;
  pr.q_u = q_from_nodes(p, ed, t, u, *s_closed_form(t));
  return pr;
}

std::optional<long> StabilityReport::chow_first_failure() const {
  for (const auto& r : chow)
    if (r.check.status() == Eq18Status::Fails) return r.i;
  return std::nullopt;
}

StabilityReport analyze(const Polytope& p, const AnalyzeOptions& opts) {
  StabilityReport rep;
  rep.name = p.name();
  rep.dim = p.dim();
  rep.flags = is_reflexive_delzant(p);
  rep.lattice = is_lattice_polytope(p);
  if (rep.lattice) rep.ehrhart = ehrhart(p);
  rep.extremal = extremal_affine(p);
  rep.futaki = futaki_vector(rep.extremal);
  if (all_rhs_one(p) || reflexive_center(p))
    rep.k = k_classify(p, rep.extremal, opts.grid);
  else
    rep.k_note = "not a lattice translate of an anticanonical polytope (facet rhs differ from 1)";

  const int n = p.dim();
  for (long i = 1; i <= opts.i_max; ++i) {
    const ThetaNodes t = theta_nodes(p, rep.extremal, i);
    ChowRecord r;
    r.i = i;
    r.count = static_cast<long>(t.nodes.size());
    r.theta_mean = t.mean;
    r.s_closed = s_closed_form(t);
    r.check = chow_from_nodes(rep.extremal, t);
    if (r.check.status() != Eq18Status::Fails)
      r.q_affine = q_from_nodes(p, rep.extremal, t, PLFn::affine(AffineFn::coordinate(n, 0)), r.check.s().value_or(Rat(0)));
    rep.chow.push_back(std::move(r));
  }
  return rep;
}

}  // namespace toricstab
