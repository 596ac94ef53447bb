#include "dps/data.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dps {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ordered_json parse_file(const std::string& path) {
  return ordered_json::parse(read_file(path));
}

DPSDescriptor parse_descriptor_checked(const RootDatum& datum,
                                       const std::string& text,
                                       int fallback_k) {
  if (auto d = parse_descriptor(datum, text)) return *d;
  // Pair entries may omit the chi order (the source tables imply it from
  // the owning case); retry with it appended.
  if (text.size() > 1 && text.rfind("[[", 0) == 0) {
    std::string retry = text.substr(0, text.size() - 1) + "," +
                        std::to_string(fallback_k) + "]";
    if (auto d = parse_descriptor(datum, retry)) return *d;
  }
  throw std::runtime_error("bad descriptor in data file: " + text);
}

std::string condition_kind_name(BranchCondition::Kind kind) {
  switch (kind) {
    case BranchCondition::Kind::EqRat: return "equals";
    case BranchCondition::Kind::EqPmOne: return "pm_one";
    case BranchCondition::Kind::NeqPmOne: return "not_pm_one";
    case BranchCondition::Kind::EqZero: return "zero";
    case BranchCondition::Kind::Twisted: return "twisted";
    case BranchCondition::Kind::Quadratic: return "quadratic";
    case BranchCondition::Kind::NeitherWall: return "neither_wall";
  }
  return "zero";
}

BranchCondition::Kind condition_kind_from_name(const std::string& name) {
  if (name == "equals") return BranchCondition::Kind::EqRat;
  if (name == "pm_one") return BranchCondition::Kind::EqPmOne;
  if (name == "not_pm_one") return BranchCondition::Kind::NeqPmOne;
  if (name == "zero") return BranchCondition::Kind::EqZero;
  if (name == "twisted") return BranchCondition::Kind::Twisted;
  if (name == "quadratic") return BranchCondition::Kind::Quadratic;
  if (name == "neither_wall") return BranchCondition::Kind::NeitherWall;
  throw std::runtime_error("unknown condition kind: " + name);
}

SocleBound socle_bound_from_name(const std::string& name) {
  if (name == "unique") return SocleBound::Unique;
  if (name == "at_most_two") return SocleBound::AtMostTwo;
  if (name == "length_two") return SocleBound::LengthTwo;
  if (name == "unknown") return SocleBound::Unknown;
  throw std::runtime_error("unknown socle bound: " + name);
}

}  // namespace

std::string resolve_data_dir(const std::string& cli_value) {
  if (!cli_value.empty()) return cli_value;
  if (const char* env = std::getenv("DPS_DATA_DIR"); env && *env) return env;
#ifdef DPSTOOL_DATA_DIR
  return DPSTOOL_DATA_DIR;
#else
  return "data";
#endif
}

WitnessTable load_witness_table(const RootDatum& datum,
                                const std::string& data_dir) {
  WitnessTable table;
  const std::string path = data_dir + "/witnesses.json";
  const ordered_json doc = parse_file(path);
  for (const auto& row : doc.at("cases")) {
    const std::string case_text = row.at("case").get<std::string>();
    const DPSDescriptor desc = parse_descriptor_checked(datum, case_text, 1);
    const DPSDescriptor witness = parse_descriptor_checked(
        datum, row.at("witness").get<std::string>(), desc.k);
    const std::string key = render_descriptor(desc);
    if (!table.by_case.emplace(key, witness).second)
      throw std::runtime_error("duplicate witness entry for " + key);
  }
  return table;
}

RecordedFacts load_recorded_facts(const std::string& data_dir) {
  RecordedFacts facts;
  const ordered_json doc = parse_file(data_dir + "/recorded.json");
  if (doc.contains("irreducible"))
    for (const auto& [key, note] : doc.at("irreducible").items())
      facts.irreducible[key] = note.get<std::string>();
  if (doc.contains("socle"))
    for (const auto& [key, entry] : doc.at("socle").items())
      facts.socle[key] = {
          socle_bound_from_name(entry.at("bound").get<std::string>()),
          entry.at("note").get<std::string>()};
  return facts;
}

std::vector<ChainFixture> load_chain_fixtures(const RootDatum& datum,
                                              const std::string& data_dir) {
  std::vector<ChainFixture> fixtures;
  const ordered_json doc = parse_file(data_dir + "/chains.json");
  for (const auto& fx : doc.at("fixtures")) {
    ChainFixture fixture;
    fixture.label = fx.at("label").get<std::string>();
    for (const auto& row : fx.at("rows")) {
      ChainRow r;
      const int k = row.at("k").get<int>();
      r.i_k = row.at("i").get<int>() - 1;
      r.j_k = row.at("j").get<int>() - 1;
      r.i_next = row.at("i_next").get<int>() - 1;
      r.char_k = parse_character(datum, row.at("char").get<std::string>(), k);
      r.char_next =
          parse_character(datum, row.at("char_next").get<std::string>(), k);
      fixture.rows.push_back(std::move(r));
    }
    fixtures.push_back(std::move(fixture));
  }
  return fixtures;
}

std::string rules_to_json(const RuleDatabase& db) {
  ordered_json out = ordered_json::array();
  for (const BranchRule& rule : db.rules) {
    ordered_json rec;
    rec["name"] = rule.name;
    rec["pattern_type"] = rule.pattern.id.str();
    rec["sign_symmetric"] = rule.sign_symmetric;
    ordered_json conds = ordered_json::array();
    for (std::size_t i = 0; i < rule.conditions.size(); ++i) {
      ordered_json c;
      c["node"] = i;
      c["kind"] = condition_kind_name(rule.conditions[i].kind);
      c["value"] = render_rational(rule.conditions[i].value);
      conds.push_back(std::move(c));
    }
    rec["conditions"] = std::move(conds);
    ordered_json outputs = ordered_json::array();
    for (const auto& [word, mult] : rule.outputs) {
      ordered_json o;
      o["word"] = word;
      o["mult"] = mult;
      outputs.push_back(std::move(o));
    }
    rec["outputs"] = std::move(outputs);
    out.push_back(std::move(rec));
  }
  return out.dump(2) + "\n";
}

RuleDatabase rules_from_json(const std::string& text) {
  RuleDatabase db;
  const ordered_json doc = ordered_json::parse(text);
  for (const auto& rec : doc) {
    BranchRule rule;
    rule.name = rec.at("name").get<std::string>();
    rule.pattern = build_root_datum(rec.at("pattern_type").get<std::string>());
    rule.sign_symmetric = rec.at("sign_symmetric").get<bool>();
    rule.conditions.assign(static_cast<std::size_t>(rule.pattern.rank),
                           BranchCondition{});
    std::set<int> seen_nodes;
    for (const auto& c : rec.at("conditions")) {
      const int node = c.at("node").get<int>();
      if (node < 0 || node >= rule.pattern.rank || !seen_nodes.insert(node).second)
        throw std::runtime_error("rule " + rule.name + ": bad condition node");
      const auto value = parse_rational(c.at("value").get<std::string>());
      if (!value)
        throw std::runtime_error("rule " + rule.name + ": bad condition value");
      rule.conditions[node] = BranchCondition{
          condition_kind_from_name(c.at("kind").get<std::string>()), *value};
    }
    if (static_cast<int>(seen_nodes.size()) != rule.pattern.rank)
      throw std::runtime_error("rule " + rule.name + ": missing condition nodes");
    bool have_identity = false;
    for (const auto& o : rec.at("outputs")) {
      std::vector<int> word = o.at("word").get<std::vector<int>>();
      for (int letter : word)
        if (letter < 0 || letter >= rule.pattern.rank)
          throw std::runtime_error("rule " + rule.name + ": bad word letter");
      const auto mult = o.at("mult").get<std::uint64_t>();
      if (mult == 0)
        throw std::runtime_error("rule " + rule.name + ": zero multiplicity");
      if (word.empty()) {
        have_identity = true;
        rule.identity_mult = mult;
      }
      rule.outputs.emplace_back(std::move(word), mult);
    }
    if (!have_identity)
      throw std::runtime_error("rule " + rule.name + ": missing identity word");
    db.rules.push_back(std::move(rule));
  }
  return db;
}

RuleDatabase load_rule_database(const std::string& data_dir) {
  RuleDatabase db = RuleDatabase::standard();
  const std::string path = data_dir + "/rules.json";
  if (!std::filesystem::exists(path)) return db;
  RuleDatabase extra = rules_from_json(read_file(path));
  std::set<std::string> names;
  for (const BranchRule& r : db.rules) names.insert(r.name);
  for (BranchRule& r : extra.rules) {
    if (!names.insert(r.name).second)
      throw std::runtime_error("rule name collision: " + r.name);
    db.rules.push_back(std::move(r));
  }
  return db;
}

} // namespace dps
