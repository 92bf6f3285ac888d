#pragma once

#include "toricstab/plfun.hpp"
#include "toricstab/polytope.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace toricstab {

using Json = nlohmann::ordered_json;

Json rat_json(const Rat& r);
Json vec_json(const RatVec& v);
Json affine_json(const AffineFn& f);

Rat rat_from_json(const Json& j, const std::string& field);
RatVec vec_from_json(const Json& j, const std::string& field);

/// {"name", "dim", "halfspaces": [{"normal": [..], "rhs": "p/q"}], "vertices": [[..]]}.
/// Either representation suffices; when both are given they must agree.
/// Throws Parse (malformed field) or Validation (violated invariant).
Polytope polytope_from_json(const Json& j);
Json polytope_to_json(const Polytope& p);

Polytope load_polytope(const std::filesystem::path& path);
void save_polytope(const std::filesystem::path& path, const Polytope& p);

/// {"mode": "convex"|"concave", "pieces": [{"a": [..], "c": "p/q"}]}
PLFn plfn_from_json(const Json& j);
Json plfn_to_json(const PLFn& u);

enum class Provenance { Explicit, DatabaseDerived };
const char* to_string(Provenance p);

struct CorpusEntry {
  std::string name;
  Polytope polytope;
  Provenance provenance;
  std::string citation;
  Json expected;  // published check values; may be empty
  Json extra;     // anything else stored with the entry (fan rays, dual vertices)
};

/// TORICSTAB_CORPUS_DIR if set, otherwise the directory baked in at build time.
std::filesystem::path corpus_dir();
std::vector<std::string> corpus_names();
CorpusEntry load_corpus_entry(const std::string& name);
std::vector<CorpusEntry> load_corpus();

/// "corpus:NAME" or a path to a polytope JSON file.
Polytope resolve_input(const std::string& input);

}  // namespace toricstab
