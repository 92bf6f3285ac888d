// toricstab: exact toric K-/Chow-stability checks on rational polytopes.
//
// Exit codes: 0 success, 2 invalid input, 3 computation error,
// 4 an undetermined verdict under --strict.

#include "toricstab/errors.hpp"
#include "toricstab/io.hpp"
#include "toricstab/report.hpp"
#include "toricstab/stability.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <iostream>
#include <thread>

using namespace toricstab;

namespace {

enum class Format { Text, Json, Csv };

struct Options {
  std::string input;
  std::string format = "text";
  long i_max = 6;
  int grid = 1;
  int offsets = 7;
  int jobs = 1;
  bool strict = false;

  Format fmt() const { return format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text; }
  AnalyzeOptions analyze() const {
    AnalyzeOptions a;
    a.i_max = i_max;
    a.grid.box = grid;
    a.grid.offsets = offsets;
    return a;
  }
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::Validation:
    case ErrorKind::Io:
    case ErrorKind::Unbounded:
    case ErrorKind::Empty:
    case ErrorKind::NotFullDimensional:
    case ErrorKind::DegenerateNormal:
    case ErrorKind::InvalidArgument: return 2;
    default: return 3;
  }
}

int emit_error(const Options& o, const std::string& kind, const std::string& message, int code) {
  if (o.fmt() == Format::Json)
    std::cout << Json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump(2) << "\n";
  else
    std::cerr << "toricstab: " << message << "\n";
  return code;
}

std::optional<CorpusEntry> corpus_entry_for(const std::string& input) {
  constexpr std::string_view prefix = "corpus:";
  if (input.rfind(prefix, 0) != 0) return std::nullopt;
  return load_corpus_entry(input.substr(prefix.size()));
}

// Discrepancies against the published values stored with a corpus entry.
std::vector<std::string> corpus_notes(const std::optional<CorpusEntry>& e, const StabilityReport& r, bool with_chow) {
  if (!e) return {};
  std::vector<std::string> out;
  for (auto& n : compare_with_corpus(*e, r).notes)
    if (with_chow || n.rfind("Chow", 0) != 0) out.push_back(std::move(n));
  return out;
}

void print_notes(const std::vector<std::string>& notes) {
  if (notes.empty()) return;
  std::cout << "corpus notes:\n";
  for (const auto& n : notes) std::cout << "  " << n << "\n";
}

int undetermined_code(const Options& o, const std::optional<KVerdict>& k) {
  return o.strict && k && k->cls == KClass::Undetermined ? 4 : 0;
}

int cmd_analyze(const Options& o) {
  const Polytope p = resolve_input(o.input);
  const StabilityReport r = analyze(p, o.analyze());
  const auto notes = corpus_notes(corpus_entry_for(o.input), r, true);
  switch (o.fmt()) {
    case Format::Json: {
      Json j = report_json(r);
      if (!notes.empty()) j["corpus_notes"] = notes;
      std::cout << j.dump(2) << "\n";
      break;
    }
    case Format::Csv: std::cout << csv_header() << csv_row(r); break;
    case Format::Text:
      std::cout << report_text(r);
      print_notes(notes);
      break;
  }
  return undetermined_code(o, r.k);
}

int cmd_theta(const Options& o) {
  const Polytope p = resolve_input(o.input);
  const ExtremalData ed = extremal_affine(p);
  const RatVec f = futaki_vector(ed);
  switch (o.fmt()) {
    case Format::Json: {
      Json j = extremal_json(ed);
      j["futaki"] = vec_json(f);
      j["futaki_vanishes"] = f.isZero();
      std::cout << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "theta,sbar,futaki\n\"" << ed.theta.to_string() << "\"," << to_string(ed.sbar) << ",\"" << to_string(f)
                << "\"\n";
      break;
    case Format::Text:
      std::cout << "θ = " << ed.theta.to_string() << "\n"
                << "S = " << to_string(ed.sbar) << "\n"
                << "Futaki = " << to_string(f) << (f.isZero() ? " (vanishes)" : "") << "\n";
      break;
  }
  return 0;
}

int cmd_ehrhart(const Options& o) {
  const Polytope p = resolve_input(o.input);
  const EhrhartPoly e = ehrhart(p);
  switch (o.fmt()) {
    case Format::Json: std::cout << ehrhart_json(e).dump(2) << "\n"; break;
    case Format::Csv:
      std::cout << "t,count,polynomial_value\n";
      for (const auto& [t, c] : e.counts) std::cout << t << "," << c << "," << to_string(e(Rat(t))) << "\n";
      break;
    case Format::Text:
      std::cout << "E(t) = " << e.to_string() << "\n";
      for (const auto& [t, c] : e.counts)
        std::cout << "  t=" << t << "  count " << c << (t > p.dim() ? "  (verification)" : "") << "\n";
      break;
  }
  return 0;
}

int cmd_kstab(const Options& o) {
  const Polytope p = resolve_input(o.input);
  SearchGrid g;
  g.box = o.grid;
  g.offsets = o.offsets;
  const ExtremalData ed = extremal_affine(p);
  const KVerdict k = k_classify(p, ed, g);
  StabilityReport partial;
  partial.extremal = ed;
  partial.k = k;
  const auto notes = corpus_notes(corpus_entry_for(o.input), partial, false);
  switch (o.fmt()) {
    case Format::Json: {
      Json j = kverdict_json(k);
      j["theta"] = affine_json(ed.theta);
      if (!notes.empty()) j["corpus_notes"] = notes;
      std::cout << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "verdict,negative_volume,criterion_lhs,criterion_rhs\n\"" << to_string(k.cls) << "\","
                << (k.negative_part ? to_string(k.negative_volume) : "0") << "," << (k.lhs ? to_string(*k.lhs) : "")
                << "," << (k.rhs ? to_string(*k.rhs) : "") << "\n";
      break;
    case Format::Text:
      std::cout << "θ = " << ed.theta.to_string() << "\n" << kverdict_text(k);
      print_notes(notes);
      break;
  }
  return undetermined_code(o, k);
}

int cmd_chow(const Options& o) {
  const Polytope p = resolve_input(o.input);
  const ExtremalData ed = extremal_affine(p);
  std::vector<ChowRecord> recs;
  for (long i = 1; i <= o.i_max; ++i) {
    const ThetaNodes t = theta_nodes(p, ed, i);
    ChowRecord r;
    r.i = i;
    r.count = static_cast<long>(t.nodes.size());
    r.theta_mean = t.mean;
    r.s_closed = s_closed_form(t);
    r.check = chow_necessary(p, ed, i);
    recs.push_back(std::move(r));
  }
  switch (o.fmt()) {
    case Format::Json: {
      Json a = Json::array();
      for (const auto& r : recs) a.push_back(chow_json(r));
      std::cout << Json{{"theta", affine_json(ed.theta)}, {"records", a}}.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "i,count,status,s,s_closed_form,theta_mean\n";
      for (const auto& r : recs)
        std::cout << r.i << "," << r.count << "," << to_string(r.check.status()) << ","
                  << (r.check.s() ? to_string(*r.check.s()) : "") << "," << (r.s_closed ? to_string(*r.s_closed) : "")
                  << "," << to_string(r.theta_mean) << "\n";
      break;
    case Format::Text:
      std::cout << "θ = " << ed.theta.to_string() << "\n" << chow_text(recs);
      for (const auto& r : recs)
        if (r.check.status() == Eq18Status::Fails) {
          std::cout << "Fails at i=" << r.i << ": relatively Chow unstable at this dilation\n";
          break;
        }
      break;
  }
  return 0;
}

int cmd_tables(const Options& o) {
  const auto entries = load_corpus();
  // workers claim entries by index; results land in corpus order regardless of completion order
  std::vector<StabilityReport> reports(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next++) < entries.size();) {
      try {
        reports[k] = analyze(entries[k].polytope, o.analyze());
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < o.jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  switch (o.fmt()) {
    case Format::Json: std::cout << tables_json(entries, reports).dump(2) << "\n"; break;
    case Format::Csv:
      std::cout << csv_header();
      for (const auto& r : reports) std::cout << csv_row(r);
      break;
    case Format::Text: std::cout << tables_text(entries, reports); break;
  }
  int code = 0;
  for (const auto& r : reports) code = std::max(code, undetermined_code(o, r.k));
  return code;
}

int cmd_corpus_list(const Options& o) {
  const auto entries = load_corpus();
  switch (o.fmt()) {
    case Format::Json: {
      Json a = Json::array();
      for (const auto& e : entries)
        a.push_back(Json{{"name", e.name}, {"provenance", to_string(e.provenance)}, {"citation", e.citation}});
      std::cout << a.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "name,provenance\n";
      for (const auto& e : entries) std::cout << e.name << "," << to_string(e.provenance) << "\n";
      break;
    case Format::Text:
      for (const auto& e : entries) std::cout << e.name << "  " << to_string(e.provenance) << "\n";
      break;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact relative K- and Chow-stability checks for toric varieties"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--strict", o.strict, "Exit with code 4 when a K-verdict is undetermined");

  auto input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Polytope JSON file or corpus:NAME")->required();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_flag("--strict", o.strict, "Exit with code 4 when a K-verdict is undetermined");
  };
  auto search = [&](CLI::App* sub) {
    sub->add_option("--grid", o.grid, "Integer search directions with entries in [-G, G]")->check(CLI::Range(0, 4));
    sub->add_option("--offsets", o.offsets, "Cut levels per search direction")->check(CLI::Range(1, 64));
  };
  auto imax = [&](CLI::App* sub) {
    sub->add_option("--i-max", o.i_max, "Largest dilation i checked")->check(CLI::Range(1, 30));
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Full stability report");
  input(analyze_cmd);
  imax(analyze_cmd);
  search(analyze_cmd);
  auto* theta_cmd = app.add_subcommand("theta", "Extremal affine function, average scalar curvature, Futaki vector");
  input(theta_cmd);
  auto* ehrhart_cmd = app.add_subcommand("ehrhart", "Ehrhart polynomial with verification rows");
  input(ehrhart_cmd);
  auto* kstab_cmd = app.add_subcommand("kstab", "K-stability classification with the negative part");
  input(kstab_cmd);
  search(kstab_cmd);
  auto* chow_cmd = app.add_subcommand("chow", "Chow balancing system for i = 1..i-max");
  input(chow_cmd);
  imax(chow_cmd);
  auto* tables_cmd = app.add_subcommand("tables", "Both tables across the corpus, with provenance and discrepancies");
  tables_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  tables_cmd->add_flag("--strict", o.strict, "Exit with code 4 when a K-verdict is undetermined");
  tables_cmd->add_option("--jobs", o.jobs, "Worker threads; output order is fixed by the corpus")->check(CLI::Range(1, 64));
  o.i_max = 6;
  imax(tables_cmd);
  search(tables_cmd);
  auto* corpus_cmd = app.add_subcommand("corpus", "Corpus operations");
  corpus_cmd->require_subcommand(1);
  auto* list_cmd = corpus_cmd->add_subcommand("list", "Entries and provenance");
  list_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(o);
    if (*theta_cmd) return cmd_theta(o);
    if (*ehrhart_cmd) return cmd_ehrhart(o);
    if (*kstab_cmd) return cmd_kstab(o);
    if (*chow_cmd) return cmd_chow(o);
    if (*tables_cmd) return cmd_tables(o);
    if (*list_cmd) return cmd_corpus_list(o);
  } catch (const Error& e) {
    return emit_error(o, to_string(e.kind()), e.what(), exit_code(e.kind()));
  } catch (const std::exception& e) {
    return emit_error(o, "InternalError", e.what(), 3);
  }
  return 0;
}
