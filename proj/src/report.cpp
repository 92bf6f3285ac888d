#include "toricstab/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace toricstab {

namespace {

std::string k_label(const StabilityReport& r) {
  if (!r.k) return "n/a";
  switch (r.k->cls) {
    case KClass::Stable: return "stable";
    case KClass::UnstableByCriterion:
    case KClass::UnstableByWitness: return "unstable";
    case KClass::Undetermined: return "undetermined";
  }
  return "?";
}

std::string chow_label(const StabilityReport& r) {
  if (auto i = r.chow_first_failure()) return "unstable (balancing fails at i=" + std::to_string(*i) + ")";
  if (r.k && (r.k->cls == KClass::UnstableByCriterion || r.k->cls == KClass::UnstableByWitness))
    return "unstable (K-unstable)";
  return "not refuted (i<=" + std::to_string(r.chow.empty() ? 0 : r.chow.back().i) + ")";
}

Json points_json(const std::vector<RatVec>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(vec_json(p));
  return a;
}

std::string points_text(const std::vector<RatVec>& pts) {
  std::string out;
  for (const auto& p : pts) out += (out.empty() ? "" : ", ") + to_string(p);
  return "{" + out + "}";
}

std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

// padded column that always keeps one separating space
std::string col(const std::string& s, std::size_t w) {
  return pad(s, w - 1) + " ";
}

}  // namespace

Json ehrhart_json(const EhrhartPoly& e) {
  Json counts = Json::array();
  for (const auto& [t, c] : e.counts) counts.push_back(Json{{"t", t}, {"count", c}});
  return Json{{"coeffs", vec_json(e.coeffs)}, {"text", e.to_string()}, {"counts", counts}};
}

Json extremal_json(const ExtremalData& ed) {
  return Json{{"theta", affine_json(ed.theta)},
              {"sbar", rat_json(ed.sbar)},
              {"volume", rat_json(ed.volume)},
              {"boundary_volume", rat_json(ed.boundary_volume)},
              {"moments", vec_json(ed.moments)},
              {"boundary_moments", vec_json(ed.boundary_moments)}};
}

Json kverdict_json(const KVerdict& k) {
  Json j;
  j["verdict"] = to_string(k.cls);
  if (k.negative_part) {
    j["negative_part"] = points_json(k.negative_part->vertices());
    j["negative_volume"] = rat_json(k.negative_volume);
    j["negative_integral"] = rat_json(k.negative_integral);
  } else {
    j["negative_part"] = "empty";
  }
  if (k.lhs) {
    j["criterion_lhs"] = rat_json(*k.lhs);
    j["criterion_rhs"] = rat_json(*k.rhs);
    j["criterion_holds"] = *k.lhs < *k.rhs;
  }
  if (k.witness) {
    j["witness"] = plfn_to_json(*k.witness);
    j["witness_value"] = rat_json(*k.witness_value);
  }
  if (k.searched) j["searched_candidates"] = k.searched;
  return j;
}

Json chow_json(const ChowRecord& r) {
  Json j{{"i", r.i},
         {"count", r.count},
         {"theta_mean", rat_json(r.theta_mean)},
         {"s_closed_form", r.s_closed ? rat_json(*r.s_closed) : Json(nullptr)},
         {"status", to_string(r.check.status())},
         {"s", r.check.s() ? rat_json(*r.check.s()) : Json(nullptr)},
         {"lattice_sum", vec_json(r.check.lattice_sum)},
         {"coeffs", vec_json(r.check.coeffs)},
         {"rhs", vec_json(r.check.rhs)}};
  if (r.q_affine) j["q_affine_check"] = rat_json(*r.q_affine);
  return j;
}

Json report_json(const StabilityReport& r) {
  Json j;
  j["name"] = r.name;
  j["dim"] = r.dim;
  j["reflexive"] = r.flags.reflexive;
  j["delzant"] = r.flags.delzant;
  j["lattice"] = r.lattice;
  j["extremal"] = extremal_json(r.extremal);
  j["futaki"] = vec_json(r.futaki);
  j["futaki_vanishes"] = r.futaki.isZero();
  if (r.ehrhart) j["ehrhart"] = ehrhart_json(*r.ehrhart);
  if (r.k)
    j["k"] = kverdict_json(*r.k);
  else
    j["k"] = Json{{"verdict", "n/a"}, {"note", r.k_note}};
  Json chow = Json::array();
  for (const auto& c : r.chow) chow.push_back(chow_json(c));
  j["chow"] = chow;
  j["chow_verdict"] = chow_label(r);
  return j;
}

std::string kverdict_text(const KVerdict& k) {
  std::ostringstream os;
  os << "K-verdict: " << to_string(k.cls) << "\n";
  if (!k.negative_part) {
    os << "  negative part {theta >= 1}: empty interior\n";
    return os.str();
  }
  os << "  negative part {theta >= 1}: " << points_text(k.negative_part->vertices()) << "\n";
  os << "  Vol(neg) = " << to_string(k.negative_volume) << "\n";
  os << "  int_neg (1-theta)^2 = " << to_string(k.negative_integral) << "\n";
  os << "  criterion 1 - c < int_neg(1-theta)^2 / Vol(neg): " << to_string(*k.lhs) << " < " << to_string(*k.rhs)
     << " is " << (*k.lhs < *k.rhs ? "true" : "false") << "\n";
  if (k.witness) {
    std::string pieces;
    for (const auto& f : k.witness->pieces) pieces += (pieces.empty() ? "" : ", ") + f.to_string();
    os << "  witness u = max{" << pieces << "}, L(u) = " << to_string(*k.witness_value) << "\n";
  }
  if (k.searched) os << "  destabilizer candidates evaluated: " << k.searched << "\n";
  return os.str();
}

std::string chow_text(const std::vector<ChowRecord>& records) {
  std::ostringstream os;
  os << "  i  E(i)   status  s              s closed form   bar theta\n";
  for (const auto& r : records) {
    os << "  " << col(std::to_string(r.i), 3) << col(std::to_string(r.count), 7) << col(to_string(r.check.status()), 8)
       << col(r.check.s() ? to_string(*r.check.s()) : "-", 15) << col(r.s_closed ? to_string(*r.s_closed) : "-", 16)
       << to_string(r.theta_mean) << "\n";
    if (r.check.status() == Eq18Status::Fails)
      os << "     sum a = " << to_string(r.check.lattice_sum) << ", coefficient vector = " << to_string(r.check.coeffs)
         << ", required = " << to_string(r.check.rhs) << "\n";
  }
  return os.str();
}

std::string report_text(const StabilityReport& r) {
  std::ostringstream os;
  os << "polytope " << (r.name.empty() ? "(unnamed)" : r.name) << " (dim " << r.dim << ")\n";
  os << "  reflexive: " << (r.flags.reflexive ? "yes" : "no") << ", delzant: " << (r.flags.delzant ? "yes" : "no")
     << ", lattice: " << (r.lattice ? "yes" : "no") << "\n";
  os << "  Vol = " << to_string(r.extremal.volume) << ", Vol(boundary) = " << to_string(r.extremal.boundary_volume)
     << ", S = " << to_string(r.extremal.sbar) << "\n";
  if (r.ehrhart) os << "  E(t) = " << r.ehrhart->to_string() << "\n";
  os << "  theta = " << r.extremal.theta.to_string() << "\n";
  os << "  Futaki = " << to_string(r.futaki) << (r.futaki.isZero() ? " (vanishes)" : "") << "\n";
  if (r.k)
    os << kverdict_text(*r.k);
  else
    os << "K-verdict: n/a (" << r.k_note << ")\n";
  os << "Chow balancing system:\n" << chow_text(r.chow);
  os << "Chow verdict: " << chow_label(r) << "\n";
  return os.str();
}

std::string csv_header() {
  return "name,dim,reflexive,delzant,volume,sbar,theta,futaki_vanishes,k_verdict,negative_volume,criterion_lhs,"
         "criterion_rhs,chow_first_failure,chow_verdict\n";
}

std::string csv_row(const StabilityReport& r) {
  auto q = [](const std::string& s) { return "\"" + s + "\""; };
  std::ostringstream os;
  os << r.name << "," << r.dim << "," << r.flags.reflexive << "," << r.flags.delzant << "," << to_string(r.extremal.volume)
     << "," << to_string(r.extremal.sbar) << "," << q(r.extremal.theta.to_string()) << "," << r.futaki.isZero() << ","
     << q(r.k ? to_string(r.k->cls) : "n/a") << ","
     << (r.k && r.k->negative_part ? to_string(r.k->negative_volume) : "0") << ","
     << (r.k && r.k->lhs ? to_string(*r.k->lhs) : "") << "," << (r.k && r.k->rhs ? to_string(*r.k->rhs) : "") << ","
     << (r.chow_first_failure() ? std::to_string(*r.chow_first_failure()) : "") << "," << q(chow_label(r)) << "\n";
  return os.str();
}

CorpusComparison compare_with_corpus(const CorpusEntry& e, const StabilityReport& r) {
  CorpusComparison c;
  c.name = e.name;
  c.provenance = e.provenance;
  const Json& x = e.expected;
  c.k_computed = k_label(r);
  c.chow_computed = chow_label(r);
  c.k_published = x.value("k_published", std::string());
  c.chow_published = x.value("chow_published", std::string());

  if (x.contains("theta")) {
    const AffineFn want{vec_from_json(x["theta"]["a"], e.name + ".theta.a"), rat_from_json(x["theta"]["c"], e.name + ".theta.c")};
    c.theta_matches = want == r.extremal.theta;
    if (!c.theta_matches)
      c.notes.push_back("theta differs from published " + want.to_string() + "; computed " + r.extremal.theta.to_string());
  } else {
    c.theta_matches = true;
  }

  if (x.contains("negative_part") && r.k) {
    const bool want_empty = x["negative_part"].is_string();
    c.negative_split_matches = want_empty == !r.k->negative_part.has_value();
    if (!want_empty) {
      std::vector<RatVec> want;
      for (const auto& v : x["negative_part"]) want.push_back(vec_from_json(v, e.name + ".negative_part"));
      std::sort(want.begin(), want.end(), [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
      c.negative_part_matches = r.k->negative_part && r.k->negative_part->vertices() == want;
    }
    if (!c.negative_split_matches) c.notes.push_back("negative part emptiness differs from published");
    if (c.negative_part_matches && !*c.negative_part_matches)
      c.notes.push_back("negative part vertices differ from published");
  } else {
    c.negative_split_matches = !r.k.has_value();
  }
  if (x.contains("negative_part_sign_corrected")) {
    std::string vals;
    for (const auto& v : x["negative_part_sign_corrected"]) vals += (vals.empty() ? "" : ", ") + v.get<std::string>();
    c.notes.push_back("published negative-part vertex list corrected: x3 = " + vals +
                      " printed with the wrong sign (violates x3 >= -1); the sign-flipped value matches exactly");
  }

  if (x.contains("published_intermediates") && r.k && r.k->negative_part) {
    const Json& pi = x["published_intermediates"];
    const Polytope& neg = *r.k->negative_part;
    const int n = neg.dim();
    const Rat m3 = integrate(neg, Poly::variable(n, 2));
    const Rat m33 = integrate(neg, Poly::variable(n, 2).pow(2));
    const Rat pub3 = rat_from_json(pi["negative_moment_x3"], "published");
    const Rat pub33 = rat_from_json(pi["negative_moment_x3_squared"], "published");
    const Rat pubint = rat_from_json(pi["negative_integral"], "published");
    if (m3 != pub3 || m33 != pub33 || r.k->negative_integral != pubint) {
      c.notes.push_back("published intermediate integrals are inconsistent with the negative part (|x3| <= 1 there, "
                        "so |int x3| <= Vol(neg) = " + to_string(r.k->negative_volume) + ")");
      c.notes.push_back("  int_neg x3: published " + to_string(pub3) + ", exact " + to_string(m3));
      c.notes.push_back("  int_neg x3^2: published " + to_string(pub33) + ", exact " + to_string(m33));
      c.notes.push_back("  int_neg (1-theta)^2: published " + to_string(pubint) + ", exact " +
                        to_string(r.k->negative_integral));
      c.notes.push_back("  criterion evaluated exactly: " + to_string(*r.k->lhs) + " < " + to_string(*r.k->rhs) + " is " +
                        (*r.k->lhs < *r.k->rhs ? "true" : "false"));
    }
  }

  if (!c.k_published.empty() && c.k_computed != c.k_published)
    c.notes.push_back("K verdict: published " + c.k_published + ", computed " + c.k_computed +
                      (r.k && r.k->cls == KClass::Undetermined ? " (criterion fails and the finite search found no witness)" : ""));
  if (c.chow_published == "unstable" && c.chow_computed.rfind("unstable", 0) != 0)
    c.notes.push_back("Chow verdict: published unstable, not confirmed up to the tested i");
  if (c.chow_published == "stable")
    c.notes.push_back("Chow stability is quoted from the literature; only the necessary balancing condition is checked");
  return c;
}

std::string tables_text(const std::vector<CorpusEntry>& entries, const std::vector<StabilityReport>& reports) {
  std::ostringstream os;
  os << "Relative stability in the toric sense (computed vs published)\n\n";
  os << pad("name", 12) << pad("provenance", 18) << pad("K computed", 14) << pad("K published", 13)
     << pad("Chow computed", 40) << "Chow published\n";
  std::vector<CorpusComparison> cmp;
  for (std::size_t k = 0; k < entries.size(); ++k) cmp.push_back(compare_with_corpus(entries[k], reports[k]));
  for (const auto& c : cmp)
    os << pad(c.name, 12) << pad(to_string(c.provenance), 18) << pad(c.k_computed, 14)
       << pad(c.k_published.empty() ? "-" : c.k_published, 13) << pad(c.chow_computed, 40)
       << (c.chow_published.empty() ? "-" : c.chow_published) << "\n";

  os << "\nExtremal affine function and negative part\n\n";
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& r = reports[k];
    const auto& c = cmp[k];
    os << pad(c.name, 12) << "theta = " << r.extremal.theta.to_string() << "  [" << (c.theta_matches ? "matches" : "DIFFERS")
       << "]\n";
    os << pad("", 12) << "neg = ";
    if (!r.k)
      os << "n/a";
    else if (!r.k->negative_part)
      os << "empty";
    else
      os << points_text(r.k->negative_part->vertices());
    if (c.negative_part_matches)
      os << "  [" << (*c.negative_part_matches ? "matches" : "DIFFERS") << "]";
    else if (r.k)
      os << "  [" << (c.negative_split_matches ? "matches" : "DIFFERS") << "]";
    os << "\n";
    for (const auto& n : c.notes) os << pad("", 12) << "note: " << n << "\n";
  }
  return os.str();
}

Json tables_json(const std::vector<CorpusEntry>& entries, const std::vector<StabilityReport>& reports) {
  Json rows = Json::array();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto c = compare_with_corpus(entries[k], reports[k]);
    const auto& r = reports[k];
    Json neg = !r.k ? Json("n/a") : !r.k->negative_part ? Json("empty") : points_json(r.k->negative_part->vertices());
    rows.push_back(Json{{"name", c.name},
                        {"provenance", to_string(c.provenance)},
                        {"theta", affine_json(r.extremal.theta)},
                        {"theta_matches", c.theta_matches},
                        {"negative_part", neg},
                        {"negative_part_matches", c.negative_part_matches ? Json(*c.negative_part_matches) : Json(nullptr)},
                        {"k_computed", c.k_computed},
                        {"k_published", c.k_published},
                        {"chow_computed", c.chow_computed},
                        {"chow_published", c.chow_published},
                        {"notes", c.notes}});
  }
  return Json{{"rows", rows}};
}

}  // namespace toricstab
