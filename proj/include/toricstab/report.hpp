#pragma once

#include "toricstab/io.hpp"
#include "toricstab/stability.hpp"

#include <string>
#include <vector>

namespace toricstab {

Json ehrhart_json(const EhrhartPoly& e);
Json extremal_json(const ExtremalData& ed);
Json kverdict_json(const KVerdict& k);
Json chow_json(const ChowRecord& r);
Json report_json(const StabilityReport& r);

std::string report_text(const StabilityReport& r);
std::string kverdict_text(const KVerdict& k);
std::string chow_text(const std::vector<ChowRecord>& records);

std::string csv_header();
std::string csv_row(const StabilityReport& r);

/// Cross-check of a computed report against the values stored with a corpus entry.
struct CorpusComparison {
  std::string name;
  Provenance provenance;
  bool theta_matches = false;
  std::optional<bool> negative_part_matches;  // only where a vertex set is stored
  bool negative_split_matches = false;        // empty vs nonempty
  std::string k_computed, k_published;
  std::string chow_computed, chow_published;
  std::vector<std::string> notes;  // discrepancies and corrections, one per line
};

CorpusComparison compare_with_corpus(const CorpusEntry& e, const StabilityReport& r);

/// Both tables for the whole corpus, deterministic given the inputs.
std::string tables_text(const std::vector<CorpusEntry>& entries, const std::vector<StabilityReport>& reports);
Json tables_json(const std::vector<CorpusEntry>& entries, const std::vector<StabilityReport>& reports);

}  // namespace toricstab
