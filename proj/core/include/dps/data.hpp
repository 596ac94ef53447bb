#pragma once

#include "dps/catalog.hpp"
#include "dps/exceptional.hpp"

#include <string>
#include <vector>

namespace dps {

// data/ directory resolution: explicit argument, else DPS_DATA_DIR, else the
// compiled-in default.
std::string resolve_data_dir(const std::string& cli_value = "");

WitnessTable load_witness_table(const RootDatum& datum,
                                const std::string& data_dir);
RecordedFacts load_recorded_facts(const std::string& data_dir);

// Named chain verification fixtures (data/chains.json): each set carries the
// owning case label, rows, and auxiliary character displays.
struct ChainFixture {
  std::string label;                 // e.g. "[1,-5/2,1]"
  std::vector<ChainRow> rows;
};
std::vector<ChainFixture> load_chain_fixtures(const RootDatum& datum,
                                              const std::string& data_dir);

// Rule-database serialization (the `rules dump` format): an array of records
// {name, pattern_type, sign_symmetric, conditions: [{node, kind, value}],
// outputs: [{word: [ints], mult}]}. Loading rebuilds each pattern datum and
// validates array sizes.
std::string rules_to_json(const RuleDatabase& db);
RuleDatabase rules_from_json(const std::string& text);

// The effective database: compiled-in standard() plus any extra rules from
// data_dir/rules.json (missing file is fine).
RuleDatabase load_rule_database(const std::string& data_dir);

} // namespace dps
