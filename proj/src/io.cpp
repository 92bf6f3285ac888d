#include "toricstab/io.hpp"

#include "toricstab/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef TORICSTAB_DEFAULT_CORPUS_DIR
#define TORICSTAB_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace toricstab {

namespace fs = std::filesystem;

Json rat_json(const Rat& r) {
  return to_string(r);
}

Json vec_json(const RatVec& v) {
  Json a = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) a.push_back(rat_json(v(k)));
  return a;
}

Json affine_json(const AffineFn& f) {
  return Json{{"a", vec_json(f.a)}, {"c", rat_json(f.c)}, {"text", f.to_string()}};
}

Rat rat_from_json(const Json& j, const std::string& field) {
  try {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, field + ": " + e.what());
  }
  throw Error(ErrorKind::Parse, field + ": expected a rational string \"p/q\" or an integer");
}

RatVec vec_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, field + ": expected an array");
  RatVec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k)
    v(static_cast<Eigen::Index>(k)) = rat_from_json(j[k], field + "[" + std::to_string(k) + "]");
  return v;
}

namespace {

const Json& member(const Json& j, const char* key, const std::string& ctx) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Parse, ctx + ": missing field \"" + key + "\"");
  return j.at(key);
}

template <typename F>
auto validated(const std::string& what, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::Unbounded:
        throw Error(ErrorKind::Validation, what + " is not bounded: " + e.what());
      case ErrorKind::Empty:
        throw Error(ErrorKind::Validation, what + " is empty: " + e.what());
      case ErrorKind::NotFullDimensional:
        throw Error(ErrorKind::Validation, what + " is not full-dimensional: " + e.what());
      case ErrorKind::DegenerateNormal:
        throw Error(ErrorKind::Validation, what + " has a zero normal: " + e.what());
      default:
        throw;
    }
  }
}

Json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

}  // namespace

Polytope polytope_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "polytope: expected a JSON object");
  if (j.contains("name") && !j.at("name").is_string()) throw Error(ErrorKind::Parse, "polytope.name: expected a string");
  const std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string();
  const std::string ctx = name.empty() ? std::string("polytope") : name;
  if (!member(j, "dim", ctx).is_number_integer()) throw Error(ErrorKind::Parse, ctx + ".dim: expected an integer");
  const long dim = j.at("dim").get<long>();
  if (dim <= 0) throw Error(ErrorKind::Validation, ctx + ": dim must be positive");
  if (!j.contains("halfspaces") && !j.contains("vertices"))
    throw Error(ErrorKind::Parse, ctx + ": needs \"halfspaces\" or \"vertices\"");

  std::optional<Polytope> from_h, from_v;
  if (j.contains("halfspaces")) {
    const Json& hs = j.at("halfspaces");
    if (!hs.is_array()) throw Error(ErrorKind::Parse, ctx + ".halfspaces: expected an array");
    std::vector<HalfSpace> h;
    for (std::size_t k = 0; k < hs.size(); ++k) {
      const std::string f = ctx + ".halfspaces[" + std::to_string(k) + "]";
      const Json& normal = member(hs[k], "normal", f);
      if (!normal.is_array() || static_cast<long>(normal.size()) != dim)
        throw Error(ErrorKind::Parse, f + ".normal: expected " + std::to_string(dim) + " integers");
      HalfSpace s;
      s.normal.resize(dim);
      for (long c = 0; c < dim; ++c) {
        if (!normal[static_cast<std::size_t>(c)].is_number_integer())
          throw Error(ErrorKind::Parse, f + ".normal[" + std::to_string(c) + "]: expected an integer");
        s.normal(c) = normal[static_cast<std::size_t>(c)].get<long>();
      }
      s.rhs = rat_from_json(member(hs[k], "rhs", f), f + ".rhs");
      if (s.normal.isZero()) throw Error(ErrorKind::Validation, f + ": normal must be nonzero");
      if (!(HalfSpace::canonical(s.normal_rat(), s.rhs) == s))
        throw Error(ErrorKind::Validation, f + ": normal must be primitive (entries with gcd 1)");
      h.push_back(std::move(s));
    }
    from_h = validated(ctx, [&] { return Polytope::from_halfspaces(std::move(h), name); });
  }
  if (j.contains("vertices")) {
    const Json& vs = j.at("vertices");
    if (!vs.is_array()) throw Error(ErrorKind::Parse, ctx + ".vertices: expected an array");
    std::vector<RatVec> pts;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      const std::string f = ctx + ".vertices[" + std::to_string(k) + "]";
      RatVec v = vec_from_json(vs[k], f);
      if (v.size() != dim) throw Error(ErrorKind::Parse, f + ": expected " + std::to_string(dim) + " coordinates");
      pts.push_back(std::move(v));
    }
    from_v = validated(ctx, [&] { return Polytope::from_vertices(pts, name); });
  }
  if (from_h && from_v && from_h->vertices() != from_v->vertices())
    throw Error(ErrorKind::Validation, ctx + ": vertices do not match the half-space description");
  return from_h ? *from_h : *from_v;
}

Json polytope_to_json(const Polytope& p) {
  Json j;
  j["name"] = p.name();
  j["dim"] = p.dim();
  Json hs = Json::array();
  for (const auto& h : p.halfspaces()) {
    Json normal = Json::array();
    for (Eigen::Index k = 0; k < h.normal.size(); ++k) normal.push_back(h.normal(k));
    hs.push_back(Json{{"normal", normal}, {"rhs", rat_json(h.rhs)}});
  }
  j["halfspaces"] = hs;
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(vec_json(v));
  j["vertices"] = vs;
  return j;
}

Polytope load_polytope(const fs::path& path) {
  return polytope_from_json(read_json(path));
}

void save_polytope(const fs::path& path, const Polytope& p) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << polytope_to_json(p).dump(2) << "\n";
}

PLFn plfn_from_json(const Json& j) {
  PLFn u;
  const Json& m = member(j, "mode", "plfn");
  const std::string mode = m.is_string() ? m.get<std::string>() : std::string();
  if (mode == "convex")
    u.mode = PLMode::Convex;
  else if (mode == "concave")
    u.mode = PLMode::Concave;
  else
    throw Error(ErrorKind::Parse, "plfn.mode: expected \"convex\" or \"concave\"");
  const Json& pieces = member(j, "pieces", "plfn");
  if (!pieces.is_array() || pieces.empty()) throw Error(ErrorKind::Parse, "plfn.pieces: expected a nonempty array");
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const std::string f = "plfn.pieces[" + std::to_string(k) + "]";
    u.pieces.push_back({vec_from_json(member(pieces[k], "a", f), f + ".a"), rat_from_json(member(pieces[k], "c", f), f + ".c")});
    if (u.pieces.back().dim() != u.pieces.front().dim()) throw Error(ErrorKind::Parse, f + ": dimension mismatch");
  }
  return u;
}

Json plfn_to_json(const PLFn& u) {
  Json pieces = Json::array();
  for (const auto& f : u.pieces) pieces.push_back(Json{{"a", vec_json(f.a)}, {"c", rat_json(f.c)}});
  return Json{{"mode", u.mode == PLMode::Convex ? "convex" : "concave"}, {"pieces", pieces}};
}

const char* to_string(Provenance p) {
  return p == Provenance::Explicit ? "explicit" : "database-derived";
}

fs::path corpus_dir() {
  if (const char* env = std::getenv("TORICSTAB_CORPUS_DIR"); env && *env) return env;
  return TORICSTAB_DEFAULT_CORPUS_DIR;
}

std::vector<std::string> corpus_names() {
  const Json idx = read_json(corpus_dir() / "index.json");
  std::vector<std::string> names;
  for (const auto& n : member(idx, "entries", "index.json")) names.push_back(n.get<std::string>());
  return names;
}

CorpusEntry load_corpus_entry(const std::string& name) {
  const fs::path path = corpus_dir() / (name + ".json");
  if (!fs::exists(path)) throw Error(ErrorKind::Io, "no corpus entry named " + name);
  const Json j = read_json(path);
  const std::string prov = member(j, "provenance", name).get<std::string>();
  Provenance p;
  if (prov == "explicit")
    p = Provenance::Explicit;
  else if (prov == "database-derived")
    p = Provenance::DatabaseDerived;
  else
    throw Error(ErrorKind::Parse, name + ".provenance: unknown value \"" + prov + "\"");
  return CorpusEntry{name,
                     polytope_from_json(j),
                     p,
                     j.value("citation", std::string()),
                     j.value("expected", Json::object()),
                     j.value("extra", Json::object())};
}

std::vector<CorpusEntry> load_corpus() {
  std::vector<CorpusEntry> out;
  for (const auto& n : corpus_names()) out.push_back(load_corpus_entry(n));
  return out;
}

Polytope resolve_input(const std::string& input) {
  constexpr std::string_view prefix = "corpus:";
  if (input.rfind(prefix, 0) == 0) return load_corpus_entry(input.substr(prefix.size())).polytope;
  return load_polytope(input);
}

}  // namespace toricstab
