#pragma once

#include "dps/branching.hpp"
#include "dps/descriptor.hpp"
#include "dps/reducibility.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dps {

enum class CellVerdict { Blank, Irr, Red, RedStar };
std::string cell_verdict_label(CellVerdict v);

enum class SocleBound { Unique, AtMostTwo, LengthTwo, Unknown };
std::string socle_bound_label(SocleBound b);

// Known classification facts that the core tests cannot reproduce on their
// own (resolved by the companion chain analysis): keyed by the rendered
// descriptor.
struct RecordedFacts {
  std::map<std::string, std::string> irreducible;   // desc -> origin note
  std::map<std::string, std::pair<SocleBound, std::string>> socle;
};

// desc -> witness datum proving reducibility.
struct WitnessTable {
  std::map<std::string, DPSDescriptor> by_case;

  std::optional<DPSDescriptor> find(const DPSDescriptor& desc) const;
};

struct AnalysisContext {
  const RootDatum* datum = nullptr;
  const RuleDatabase* rules = nullptr;
  const WitnessTable* witnesses = nullptr;   // may be null
  const RecordedFacts* recorded = nullptr;   // may be null
  int threads = 1;
  std::string cache_dir;
  bool allow_witness_search = true;  // fall back when the table has no entry
};

struct CaseAnalysis {
  DPSDescriptor desc;
  TorusCharacter lambda0, lambda1, lambda_ad;
  bool regular = false;
  CellVerdict verdict = CellVerdict::Blank;
  std::string verdict_evidence;
  SocleBound socle = SocleBound::Unknown;
  std::string socle_evidence;
  std::uint64_t mass = 0, mult0 = 0, mult1 = 0;
  bool branching_proved_irreducible = false;
};

CaseAnalysis analyze_case(const AnalysisContext& ctx, const DPSDescriptor& desc,
                          bool want_socle = true);

// Socle-bound ladder for a reducible non-regular datum (the analyze pipeline
// consults recorded facts first; this is the computational part):
//   mult_J(lambda0) == 1                      -> Unique
//   branching reaches mult_J(lambda0)         -> Unique
//   s == 0 (self-associate, known length two) -> LengthTwo
//   mult_J(lambda0) == 2 + spherical sub      -> AtMostTwo
// anything else                               -> Unknown
struct UisReport {
  SocleBound bound = SocleBound::Unknown;
  std::string evidence;
};
UisReport uis_test(const AnalysisContext& ctx, const DPSDescriptor& desc,
                   const ExponentMultiset& jacquet);

// The s-values worth displaying for node i at chi order k: those where the
// datum is non-regular or regular-reducible (everything else is regular and
// irreducible). Descending order, s <= 0.
std::vector<Rat> candidate_s_values(const RootDatum& datum, int node, int k);

// Largest chi order with any displayable s for this node (equals the node's
// coefficient in the highest root).
int max_interesting_chi_order(const RootDatum& datum, int node);

struct ReducibilityTable {
  int node = 0;  // 0-based
  std::vector<Rat> columns;                    // descending
  std::vector<int> chi_orders;                 // 1..k_max
  std::vector<std::vector<CellVerdict>> cells; // [chi order index][column]
};

ReducibilityTable reducibility_table(const AnalysisContext& ctx, int node);

} // namespace dps
