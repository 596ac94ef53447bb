// dpstool: classify degenerate principal series of split simply-laced
// groups. Subcommands: analyze, table, verify-witness, witness-search,
// branch, rules, coset-count, cache.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 internal inconsistency (cap-exceeded fixpoint, cache mass mismatch).

#include "CLI11.hpp"
#include "json.hpp"

#include "dps/branching.hpp"
#include "dps/cache.hpp"
#include "dps/catalog.hpp"
#include "dps/data.hpp"
#include "dps/descriptor.hpp"
#include "dps/exceptional.hpp"
#include "dps/orbit.hpp"
#include "dps/reducibility.hpp"
#include "dps/report.hpp"
#include "dps/root_datum.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

struct GlobalFlags {
  std::string group = "E8";
  int threads = 1;
  std::string cache_dir;
  std::string data_dir;
  std::string format = "text";
};

dps::DPSDescriptor parse_or_throw(const dps::RootDatum& datum,
                                  const std::string& text) {
  auto desc = dps::parse_descriptor(datum, text);
  if (!desc) throw std::invalid_argument("cannot parse descriptor: " + text);
  return *desc;
}

// "--search-grid N/D" bounds |s| <= N with denominators up to D on the pair
// grid; an optional "/pairs" suffix turns the pair scan on.
dps::WitnessSearchOptions parse_search_grid(const std::string& spec,
                                            const GlobalFlags& g) {
  dps::WitnessSearchOptions opts;
  opts.threads = g.threads;
  opts.cache_dir = g.cache_dir;
  if (spec.empty()) return opts;
  std::istringstream in(spec);
  std::string part;
  int field = 0;
  while (std::getline(in, part, '/')) {
    if (part == "pairs") {
      opts.include_pairs = true;
      continue;
    }
    long long value = 0;
    try {
      value = std::stoll(part);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad --search-grid field: " + part);
    }
    if (value <= 0) throw std::invalid_argument("grid bounds must be positive");
    if (field == 0) opts.max_abs_numerator = value;
    else if (field == 1) opts.max_denominator = value;
    else throw std::invalid_argument("too many --search-grid fields");
    ++field;
  }
  return opts;
}

int cmd_analyze(const GlobalFlags& g, const std::string& desc_text,
                bool no_search) {
  const dps::RootDatum datum = dps::build_root_datum(g.group);
  const auto desc = parse_or_throw(datum, desc_text);
  const std::string data_dir = dps::resolve_data_dir(g.data_dir);
  const auto& rules = dps::RuleDatabase::standard();
  dps::WitnessTable witnesses;
  dps::RecordedFacts recorded;
  if (datum.id.str() == "E8") {
    witnesses = dps::load_witness_table(datum, data_dir);
    recorded = dps::load_recorded_facts(data_dir);
  }
  dps::AnalysisContext ctx;
  ctx.datum = &datum;
  ctx.rules = &rules;
  ctx.witnesses = &witnesses;
  ctx.recorded = &recorded;
  ctx.threads = g.threads;
  ctx.cache_dir = g.cache_dir;
  ctx.allow_witness_search = !no_search;
  const dps::CaseAnalysis a = dps::analyze_case(ctx, desc);
  std::cout << dps::render_analysis(datum, a, dps::parse_format(g.format));
  return 0;
}

int cmd_table(const GlobalFlags& g, int node_1based) {
  const dps::RootDatum datum = dps::build_root_datum(g.group);
  if (node_1based < 1 || node_1based > datum.rank)
    throw std::invalid_argument("node out of range");
  const std::string data_dir = dps::resolve_data_dir(g.data_dir);
  const auto& rules = dps::RuleDatabase::standard();
  dps::WitnessTable witnesses;
  dps::RecordedFacts recorded;
  if (datum.id.str() == "E8") {
    witnesses = dps::load_witness_table(datum, data_dir);
    recorded = dps::load_recorded_facts(data_dir);
  }
  dps::AnalysisContext ctx;
  ctx.datum = &datum;
  ctx.rules = &rules;
  ctx.witnesses = &witnesses;
  ctx.recorded = &recorded;
  ctx.threads = g.threads;
  ctx.cache_dir = g.cache_dir;
  const dps::ReducibilityTable table =
      dps::reducibility_table(ctx, node_1based - 1);
  std::cout << dps::render_table(datum, table, dps::parse_format(g.format));
  return 0;
}

// Rows are checked one by one so a malformed row is reported and counted
// without aborting the run.
int cmd_verify_witness(const GlobalFlags& g, const std::string& witness_file) {
  const dps::RootDatum datum = dps::build_root_datum(g.group);
  const std::string data_dir = dps::resolve_data_dir(g.data_dir);
  std::string path = witness_file;
  if (path.empty()) path = data_dir + "/witnesses.json";
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open witness file: " + path);
  ordered_json doc;
  in >> doc;
  std::size_t passed = 0, failed = 0, malformed = 0;
  for (const auto& row : doc.at("cases")) {
    const std::string case_text = row.at("case").get<std::string>();
    const std::string witness_text = row.at("witness").get<std::string>();
    dps::DPSDescriptor desc, witness;
    try {
      desc = parse_or_throw(datum, case_text);
      auto w = dps::parse_descriptor(datum, witness_text);
      if (!w && witness_text.size() > 2 && witness_text[1] == '[')
        w = dps::parse_descriptor(
            datum, witness_text.substr(0, witness_text.size() - 1) + "," +
                       std::to_string(desc.k) + "]");
      if (!w) throw std::invalid_argument("bad witness: " + witness_text);
      witness = *w;
    } catch (const std::exception& e) {
      std::cout << "MALFORMED  " << case_text << " : " << e.what() << "\n";
      ++malformed;
      continue;
    }
    const dps::TadicReport report =
        dps::tadic_test(datum, desc, witness, g.threads, g.cache_dir);
    if (report.reducible_confirmed) {
      std::cout << "pass  " << dps::render_descriptor(desc) << "  witness "
                << dps::render_descriptor(report.witness_used) << "\n";
      ++passed;
    } else {
      std::cout << "FAIL  " << dps::render_descriptor(desc) << "  witness "
                << dps::render_descriptor(witness) << "\n";
      ++failed;
    }
  }
  std::cout << "verified " << passed << " of " << (passed + failed + malformed)
            << " rows (" << failed << " failed, " << malformed
            << " malformed)\n";
  return (failed + malformed) == 0 ? 0 : 1;
}

int cmd_witness_search(const GlobalFlags& g, const std::string& desc_text,
                       const std::string& grid) {
  const dps::RootDatum datum = dps::build_root_datum(g.group);
  const auto desc = parse_or_throw(datum, desc_text);
  const auto opts = parse_search_grid(grid, g);
  const auto results = dps::witness_search(datum, desc, opts);
  if (g.format == "json") {
    ordered_json doc;
    doc["version"] = 1;
    doc["case"] = dps::render_descriptor(desc);
    ordered_json list = ordered_json::array();
    for (const auto& [w, report] : results) {
      ordered_json entry;
      entry["witness"] = dps::render_descriptor(w);
      entry["excess_exponent"] =
          report.excess_exponent ? dps::render_character(*report.excess_exponent)
                                 : "";
      list.push_back(std::move(entry));
    }
    doc["witnesses"] = std::move(list);
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& [w, report] : results) {
      std::cout << dps::render_descriptor(w);
      if (report.excess_exponent)
        std::cout << "  excess at " << dps::render_character(*report.excess_exponent)
                  << " (" << report.excess_mult_desc << " > "
                  << report.excess_mult_witness << ")";
      std::cout << "\n";
    }
    std::cout << results.size() << " confirmed witness"
              << (results.size() == 1 ? "" : "es") << " for "
              << dps::render_descriptor(desc) << "\n";
  }
  return 0;
}

// Traces the branching fixpoint: one run per anti-dominant seed, reporting
// the multiplicities reached at the initial and terminal exponents.
int cmd_branch(const GlobalFlags& g, const std::string& desc_text) {
  const dps::RootDatum datum = dps::build_root_datum(g.group);
  const auto desc = parse_or_throw(datum, desc_text);
  const auto& rules = dps::RuleDatabase::standard();
  const dps::ExponentMultiset cap =
      dps::jacquet_multiset(datum, desc, g.threads, g.cache_dir);
  const dps::TorusCharacter lambda0 = dps::initial_exponent(datum, desc);
  const auto levi = dps::all_nodes(datum);
  const auto theta = dps::theta_of(datum, desc);
  const dps::TorusCharacter lambda1 = dps::terminal_exponent(datum, desc);
  const auto seeds = cap.antidominant_members(levi);
  std::cout << "case " << dps::render_descriptor(desc) << "\n";
  std::cout << "mass " << cap.mass() << ", mult(initial) " << cap.mult(lambda0)
            << ", mult(terminal) " << cap.mult(lambda1) << ", "
            << seeds.size() << " anti-dominant seed(s)\n";
  bool proven = false;
  for (const auto& seed : seeds) {
    dps::FixpointOptions opts;
    opts.threads = g.threads;
    const auto run = dps::dominated_fixpoint(datum, levi, cap, seed, rules, opts);
    if (!run.consistent)
      throw std::runtime_error("fixpoint exceeded the Jacquet cap: " + run.error);
    const bool full = run.f.mult(lambda0) == cap.mult(lambda0) &&
                      run.f.mult(lambda1) == cap.mult(lambda1);
    proven = proven || full;
    std::cout << "  seed " << dps::render_character(seed) << ": initial "
              << run.f.mult(lambda0) << "/" << cap.mult(lambda0)
              << ", terminal " << run.f.mult(lambda1) << "/"
              << cap.mult(lambda1) << ", support " << run.f.counts.size()
              << ", updates " << run.updates << (full ? "  [full]" : "")
              << "\n";
  }
  std::cout << (proven ? "irreducible (branching)\n"
                       : "irreducibility not established\n");
  return 0;
}

int cmd_rules_list() {
  const auto& db = dps::RuleDatabase::standard();
  for (const auto& rule : db.rules) {
    std::cout << rule.name << "  pattern " << rule.pattern.id.str()
              << "  outputs " << rule.outputs.size() << "  identity "
              << rule.identity_mult << "  mass " << rule.output_mass()
              << (rule.sign_symmetric ? "  (sign-symmetric)" : "") << "\n";
  }
  return 0;
}

int cmd_rules_dump() {
  std::cout << dps::rules_to_json(dps::RuleDatabase::standard());
  return 0;
}

int cmd_rules_derive(const std::string& sub_group, const std::string& desc_text,
                     std::string name) {
  const dps::RootDatum sub = dps::build_root_datum(sub_group);
  const auto desc = parse_or_throw(sub, desc_text);
  if (name.empty())
    name = sub_group + " " + dps::render_descriptor(desc);
  const dps::BranchRule rule = dps::derive_rule_from_dps(sub, desc, name);
  dps::RuleDatabase db;
  db.rules.push_back(rule);
  std::cout << dps::rules_to_json(db);
  return 0;
}

int cmd_coset_count(const GlobalFlags& g) {
  const dps::RootDatum datum = dps::build_root_datum(g.group);
  const auto levi = dps::all_nodes(datum);
  if (g.format == "json") {
    ordered_json doc;
    doc["version"] = 1;
    doc["group"] = datum.id.str();
    doc["weyl_order"] = dps::weyl_order(datum.id);
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < datum.rank; ++i) {
      ordered_json row;
      row["node"] = i + 1;
      row["coset_count"] =
          dps::coset_count(datum, levi, dps::complement_nodes(datum, {i}));
      rows.push_back(std::move(row));
    }
    doc["maximal_parabolics"] = std::move(rows);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "|W(" << datum.id.str() << ")| = " << dps::weyl_order(datum.id)
              << "\n";
    for (int i = 0; i < datum.rank; ++i)
      std::cout << "  |W / W_{theta_" << i + 1 << "}| = "
                << dps::coset_count(datum, levi,
                                    dps::complement_nodes(datum, {i}))
                << "\n";
  }
  return 0;
}

int cmd_cache_stat(const GlobalFlags& g) {
  std::string dir = g.cache_dir;
  if (dir.empty()) dir = dps::default_cache_dir();
  if (dir.empty()) {
    std::cout << "no cache directory configured\n";
    return 0;
  }
  std::size_t files = 0;
  std::uintmax_t bytes = 0;
  if (std::filesystem::exists(dir)) {
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (!entry.is_regular_file() || entry.path().extension() != ".tsv")
        continue;
      ++files;
      bytes += entry.file_size();
    }
  }
  std::cout << dir << ": " << files << " cached multiset(s), " << bytes
            << " bytes\n";
  return 0;
}

int cmd_cache_gc(const GlobalFlags& g, bool all) {
  std::string dir = g.cache_dir;
  if (dir.empty()) dir = dps::default_cache_dir();
  if (dir.empty()) throw std::invalid_argument("no cache directory configured");
  std::size_t removed = 0;
  if (std::filesystem::exists(dir)) {
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (!entry.is_regular_file() || entry.path().extension() != ".tsv")
        continue;
      bool stale = all;
      if (!stale) {
        std::ifstream in(entry.path());
        std::string header;
        std::getline(in, header);
        stale = header != "dps-cache 1";
      }
      if (stale) {
        std::filesystem::remove(entry.path());
        ++removed;
      }
    }
  }
  std::cout << "removed " << removed << " cache file(s) from " << dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degenerate principal series classifier"};
  app.require_subcommand(1);

  GlobalFlags g;
  g.cache_dir = dps::default_cache_dir();
  app.add_option("--group", g.group, "Group (A<n>, D<n>, E6/E7/E8)")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker thread cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--cache-dir", g.cache_dir,
                 "Multiset cache directory (env DPS_CACHE_DIR)");
  app.add_option("--data-dir", g.data_dir,
                 "Data directory (env DPS_DATA_DIR, else compiled-in)");
  app.add_option("--format", g.format, "Output format: text, json, csv, latex")
      ->check(CLI::IsMember({"text", "json", "csv", "latex"}))
      ->capture_default_str();

  std::string desc_text, witness_file, search_grid, sub_group, rule_name;
  int table_node = 0;
  bool no_search = false, gc_all = false;

  auto* analyze = app.add_subcommand("analyze", "Classify one descriptor");
  analyze->add_option("descriptor", desc_text, "e.g. \"[4,-1/2,2]\"")
      ->required();
  analyze->add_flag("--no-search", no_search,
                    "Skip the witness search fallback");

  auto* table = app.add_subcommand("table", "Emit one reducibility table");
  table->add_option("node", table_node, "Maximal parabolic node (1-based)")
      ->required();

  auto* verify =
      app.add_subcommand("verify-witness", "Run the shared-subquotient test "
                                           "for every witness table row");
  verify->add_option("--witness-file", witness_file,
                     "Witness JSON (default <data-dir>/witnesses.json)");

  auto* search =
      app.add_subcommand("witness-search", "Search for reducibility witnesses");
  search->add_option("descriptor", desc_text)->required();
  search->add_option("--search-grid", search_grid,
                     "Bounds N/D[/pairs] for the pair-datum scan");

  auto* branch =
      app.add_subcommand("branch", "Trace the branching fixpoint per seed");
  branch->add_option("descriptor", desc_text)->required();

  auto* rules = app.add_subcommand("rules", "Branching rule database");
  rules->require_subcommand(1);
  rules->add_subcommand("list", "One line per rule");
  rules->add_subcommand("dump", "Serialize the database as JSON");
  auto* derive = rules->add_subcommand("derive", "Derive a rule from a datum");
  derive->add_option("group", sub_group, "Sub-diagram group, e.g. E6")
      ->required();
  derive->add_option("descriptor", desc_text)->required();
  derive->add_option("--name", rule_name, "Rule name");

  app.add_subcommand("coset-count",
                     "Weyl order and maximal-parabolic coset counts");

  auto* cache = app.add_subcommand("cache", "Cache maintenance");
  cache->require_subcommand(1);
  cache->add_subcommand("stat", "Cache size summary");
  auto* gc = cache->add_subcommand("gc", "Drop stale-version cache files");
  gc->add_flag("--all", gc_all, "Drop every cache file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return cmd_analyze(g, desc_text, no_search);
    if (*table) return cmd_table(g, table_node);
    if (*verify) return cmd_verify_witness(g, witness_file);
    if (*search) return cmd_witness_search(g, desc_text, search_grid);
    if (*branch) return cmd_branch(g, desc_text);
    if (*rules) {
      if (rules->get_subcommand("list")->parsed()) return cmd_rules_list();
      if (rules->get_subcommand("dump")->parsed()) return cmd_rules_dump();
      return cmd_rules_derive(sub_group, desc_text, rule_name);
    }
    if (app.get_subcommand("coset-count")->parsed()) return cmd_coset_count(g);
    if (*cache) {
      if (cache->get_subcommand("stat")->parsed()) return cmd_cache_stat(g);
      return cmd_cache_gc(g, gc_all);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
