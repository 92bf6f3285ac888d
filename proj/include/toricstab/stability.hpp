#pragma once

#include "toricstab/lattice.hpp"
#include "toricstab/linalg.hpp"
#include "toricstab/plfun.hpp"
#include "toricstab/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricstab {

/// theta = a . x + c, the extremal affine function normalized by int theta = 0,
/// together with the Gram system it solves.
struct ExtremalData {
  AffineFn theta;
  Rat sbar;
  Rat volume;
  Rat boundary_volume;
  RatVec moments;           // int x_k dx
  RatVec boundary_moments;  // int x_k dsigma
  RatMat gram;              // [int x_j x_k, int x_j; int x_k, Vol]
  RatVec rhs;
};

/// Vol_sigma(boundary) / Vol; equals n for anticanonical polytopes.
Rat average_scalar(const Polytope& p);
ExtremalData extremal_affine(const Polytope& p);

/// int_{boundary} x_k dsigma - sbar * int x_k dx (up to a positive constant).
Rat futaki(const Polytope& p, int k);
RatVec futaki_vector(const ExtremalData& ed);

/// int_{boundary} u dsigma - int (sbar + theta) u dx
Rat l_functional(const Polytope& p, const ExtremalData& ed, const PLFn& u);
/// Same value through the divergence theorem, sum over linearity cells of
/// int (x . grad u - u) + (1 - theta) u. Requires every rhs to be 1.
Rat l_functional_by_parts(const Polytope& p, const ExtremalData& ed, const PLFn& u);

enum class KClass {
  Stable,               // sup theta <= 1: the negative part has empty interior
  UnstableByCriterion,  // 1 - c < int_{neg}(1 - theta)^2 / Vol(neg)
  UnstableByWitness,    // a searched u = max{0, b.x + d} with L(u) < 0
  Undetermined,
};

const char* to_string(KClass k);

struct SearchGrid {
  int box = 1;      // integer directions with entries in [-box, box]
  int offsets = 7;  // equally spaced cut levels strictly inside the polytope
};

struct KVerdict {
  KClass cls = KClass::Undetermined;
  std::optional<Polytope> negative_part;  // {x in P : theta(x) >= 1}
  Rat negative_volume;
  Rat negative_integral;  // int_{neg} (1 - theta)^2
  std::optional<Rat> lhs;  // 1 - c
  std::optional<Rat> rhs;  // negative_integral / negative_volume
  std::optional<PLFn> witness;
  std::optional<Rat> witness_value;  // L(witness), exactly negative
  long searched = 0;                 // destabilizer candidates evaluated
};

struct SearchResult {
  std::optional<PLFn> witness;
  std::optional<Rat> value;
  long evaluated = 0;
};

SearchResult destabilizer_search(const Polytope& p, const ExtremalData& ed, const SearchGrid& grid = {});

/// Throws NotReflexive unless every rhs is 1, up to a lattice translation
/// (the verdict is then computed at the center and translated back).
KVerdict k_classify(const Polytope& p, const SearchGrid& grid = {});
KVerdict k_classify(const Polytope& p, const ExtremalData& ed, const SearchGrid& grid = {});

struct ThetaNodes {
  long i = 1;
  bool divided = true;          // tilde theta = (theta - mean) / i, else theta - mean
  std::vector<RatVec> nodes;    // P cap (Z/i)^n
  std::vector<Rat> theta;       // theta(a)
  Rat mean;                     // bar theta
  std::vector<Rat> centered;    // tilde theta(a)
  Rat spread;                   // sum (theta(a) - mean)^2
};

ThetaNodes theta_nodes(const Polytope& p, const ExtremalData& ed, long i, bool divided = true);

/// -i * bar theta * E(i) / sum (theta(a) - bar theta)^2; nullopt when theta is
/// constant on the nodes.
std::optional<Rat> s_closed_form(const Polytope& p, const ExtremalData& ed, long i);
std::optional<Rat> s_closed_form(const ThetaNodes& t);

enum class Eq18Status { Holds, AnyS, Fails };
const char* to_string(Eq18Status s);

/// sum a + s * sum tilde theta(a) a = (E(i) / Vol) int x, one unknown s.
struct ChowCheck {
  long i = 1;
  long count = 0;        // E(i)
  RatVec lattice_sum;    // sum of nodes a
  RatVec coeffs;         // sum tilde theta(a) a
  RatVec rhs;            // (E / Vol) int x - sum a
  ScalarSolution<Rat> solution;

  Eq18Status status() const;
  std::optional<Rat> s() const;
};

ChowCheck chow_necessary(const Polytope& p, const ExtremalData& ed, long i, bool divided = true);

/// E(i) int g - Vol sum (1 + s tilde theta(a)) g(a)
Rat q_weight_with_s(const Polytope& p, const ExtremalData& ed, long i, const PLFn& g, const Rat& s);
/// As above with s from the balancing system; PreconditionFailed when it has
/// no solution, s = 0 when every s works.
Rat q_weight(const Polytope& p, const ExtremalData& ed, long i, const PLFn& g);

struct PWeight {
  Rat value;     // E(i) int u - Vol sum u(a)
  bool lattice;  // i * Q is a lattice polytope
};

PWeight p_weight(const Polytope& p, long i, const PLFn& u, const Rat& r);

struct Projection {
  std::vector<Rat> values;  // tilde u(a) = u(a) - kappa (theta(a) - bar theta)
  Rat kappa;
  Rat perp_residual;        // sum tilde u(a) (theta(a) - bar theta), zero by construction
  Rat p_tilde;              // P(i, tilde u)
  Rat q_u;                  // Q(i, u) with the closed-form s
};

/// Throws ThetaConstant when theta is constant on the nodes.
Projection project_perp(const Polytope& p, const ExtremalData& ed, long i, const PLFn& u);

struct AnalyzeOptions {
  long i_max = 6;
  SearchGrid grid;
};

struct ChowRecord {
  long i = 1;
  long count = 0;
  Rat theta_mean;
  std::optional<Rat> s_closed;
  ChowCheck check;
  std::optional<Rat> q_affine;  // Q(i, x_1): zero whenever the system is solvable
};

struct StabilityReport {
  std::string name;
  int dim = 0;
  PolytopeFlags flags;
  bool lattice = false;
  std::optional<EhrhartPoly> ehrhart;
  ExtremalData extremal;
  RatVec futaki;
  std::optional<KVerdict> k;
  std::string k_note;  // why k is absent
  std::vector<ChowRecord> chow;

  /// First i with a failing balancing system, if any.
  std::optional<long> chow_first_failure() const;
};

StabilityReport analyze(const Polytope& p, const AnalyzeOptions& opts = {});

}  // namespace toricstab
