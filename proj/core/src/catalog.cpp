#include "dps/catalog.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dps {

std::string cell_verdict_label(CellVerdict v) {
  switch (v) {
    case CellVerdict::Blank: return "";
    case CellVerdict::Irr: return "irr.";
    case CellVerdict::Red: return "red.";
    case CellVerdict::RedStar: return "red.*";
  }
  return "";
}

std::string socle_bound_label(SocleBound b) {
  switch (b) {
    case SocleBound::Unique: return "unique";
    case SocleBound::AtMostTwo: return "at_most_two";
    case SocleBound::LengthTwo: return "length_two";
    case SocleBound::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<DPSDescriptor> WitnessTable::find(const DPSDescriptor& desc) const {
  const auto it = by_case.find(render_descriptor(desc));
  if (it == by_case.end()) return std::nullopt;
  return it->second;
}

namespace {

const TorusCharacter* min_by_render(const std::vector<TorusCharacter>& v) {
  const TorusCharacter* best = nullptr;
  std::string best_text;
  for (const TorusCharacter& c : v) {
    std::string text = render_character(c);
    if (!best || text < best_text) {
      best = &c;
      best_text = std::move(text);
    }
  }
  return best;
}

bool descriptor_s_all_zero(const DPSDescriptor& desc) {
  return std::all_of(desc.s.begin(), desc.s.end(),
                     [](const Rat& v) { return v == Rat(0); });
}

}  // namespace

UisReport uis_test(const AnalysisContext& ctx, const DPSDescriptor& desc,
                   const ExponentMultiset& jacquet) {
  const RootDatum& datum = *ctx.datum;
  const TorusCharacter lambda0 = initial_exponent(datum, desc);
  const std::uint64_t mult0 = jacquet.mult(lambda0);
  UisReport rep;

  if (mult0 == 1) {
    rep.bound = SocleBound::Unique;
    rep.evidence = "uis-mult1: the initial exponent occurs once";
    return rep;
  }

  if (ctx.rules) {
    FixpointOptions fo;
    fo.threads = 1;
    for (const TorusCharacter& seed :
         jacquet.antidominant_members(all_nodes(datum))) {
      const FixpointResult run =
          dominated_fixpoint(datum, all_nodes(datum), jacquet, seed,
                             *ctx.rules, fo);
      if (!run.consistent)
        throw std::runtime_error("fixpoint from " + render_character(seed) +
                                 " failed: " + run.error);
      if (run.f.mult(lambda0) == mult0) {
        rep.bound = SocleBound::Unique;
        rep.evidence = "uis-branching: the fixpoint from " +
                       render_character(seed) +
                       " carries the full initial-exponent multiplicity";
        return rep;
      }
    }
  }

  if (descriptor_s_all_zero(desc)) {
    bool reducible = regular_reducible(datum, desc);
    if (!reducible && ctx.witnesses) {
      if (const auto witness = ctx.witnesses->find(desc)) {
        reducible = tadic_test(datum, desc, *witness, ctx.threads,
                               ctx.cache_dir)
                        .reducible_confirmed;
      }
    }
    if (reducible) {
      rep.bound = SocleBound::LengthTwo;
      rep.evidence =
          "unitary-fact: s = 0 and reducible, hence semi-simple of length two";
      return rep;
    }
  }

  if (mult0 == 2) {
    rep.bound = SocleBound::AtMostTwo;
    rep.evidence =
        "uis-mult1: the initial exponent occurs twice; a longer socle would "
        "exceed that multiplicity";
    return rep;
  }

  rep.evidence = "inconclusive";
  return rep;
}

CaseAnalysis analyze_case(const AnalysisContext& ctx, const DPSDescriptor& desc,
                          bool want_socle) {
  if (!ctx.datum) throw std::invalid_argument("analysis context lacks a datum");
  const RootDatum& datum = *ctx.datum;
  CaseAnalysis out;
  out.desc = desc;
  out.lambda0 = initial_exponent(datum, desc);
  out.lambda1 = terminal_exponent(datum, desc);
  out.regular = is_regular(datum, desc);
  const std::string key = render_descriptor(desc);
  const std::vector<int> levi = all_nodes(datum);

  if (out.regular) {
    out.mass = coset_count(datum, levi, theta_of(datum, desc));
    out.mult0 = out.mult1 = 1;
    out.lambda_ad = antidominantize(datum, out.lambda0, levi).first;
    if (regular_reducible(datum, desc)) {
      out.verdict = CellVerdict::RedStar;
      out.verdict_evidence =
          "regular-criterion: a root outside the Levi pairs to +-1";
    } else {
      out.verdict = CellVerdict::Irr;
      out.verdict_evidence =
          "regular-criterion: no root outside the Levi pairs to +-1";
    }
    if (want_socle) {
      out.socle = SocleBound::Unique;
      out.socle_evidence =
          "uis-mult1: the initial exponent occurs once (regular orbit)";
    }
    return out;
  }

  const ExponentMultiset jac =
      jacquet_multiset(datum, desc, ctx.threads, ctx.cache_dir);
  out.mass = jac.mass();
  out.mult0 = jac.mult(out.lambda0);
  out.mult1 = jac.mult(out.lambda1);
  const auto ad = jac.antidominant_members(levi);
  if (const TorusCharacter* best = min_by_render(ad))
    out.lambda_ad = *best;
  else
    out.lambda_ad = antidominantize(datum, out.lambda0, levi).first;

  // Reducibility: recorded facts, then the witness table, then the
  // branching proof, then a bounded witness search.
  bool decided = false;
  if (ctx.recorded) {
    const auto it = ctx.recorded->irreducible.find(key);
    if (it != ctx.recorded->irreducible.end()) {
      out.verdict = CellVerdict::Irr;
      out.verdict_evidence = "recorded: " + it->second;
      decided = true;
    }
  }
  if (!decided && ctx.witnesses) {
    if (const auto witness = ctx.witnesses->find(desc)) {
      const TadicReport rep =
          tadic_test(datum, desc, *witness, ctx.threads, ctx.cache_dir);
      // A table row that fails to confirm is not a verdict; the case falls
      // through to the branching proof and the witness search.
      if (rep.reducible_confirmed) {
        out.verdict = CellVerdict::Red;
        out.verdict_evidence =
            "tadic: witness " + render_descriptor(rep.witness_used) +
            ", excess at " + render_character(*rep.excess_exponent);
        decided = true;
      }
    }
  }
  if (!decided && ctx.rules) {
    FixpointOptions fo;
    fo.threads = ctx.threads;
    fo.cache_dir = ctx.cache_dir;
    const IrreducibilityReport rep = irreducibility_test(
        datum, levi, theta_of(datum, desc), out.lambda0, jac, *ctx.rules, fo);
    if (rep.irreducible) {
      out.verdict = CellVerdict::Irr;
      out.verdict_evidence =
          "branching-irr: the fixpoint from " +
          render_character(*rep.winning_seed) +
          " reaches the full multiplicity at both end exponents";
      out.branching_proved_irreducible = true;
      decided = true;
    }
  }
  if (!decided && ctx.allow_witness_search) {
    WitnessSearchOptions so;
    so.threads = ctx.threads;
    so.cache_dir = ctx.cache_dir;
    so.max_results = 1;
    auto found = witness_search(datum, desc, so);
    if (found.empty()) {
      so.include_pairs = true;
      found = witness_search(datum, desc, so);
    }
    if (!found.empty()) {
      out.verdict = CellVerdict::Red;
      out.verdict_evidence = "tadic: searched witness " +
                             render_descriptor(found.front().first) +
                             ", excess at " +
                             render_character(
                                 *found.front().second.excess_exponent);
      decided = true;
    }
  }
  if (!decided) {
    out.verdict = CellVerdict::Blank;
    out.verdict_evidence = "inconclusive";
  }

  if (want_socle) {
    if (out.verdict == CellVerdict::Irr) {
      out.socle = SocleBound::Unique;
      out.socle_evidence = out.verdict_evidence;
    } else {
      const UisReport ladder = uis_test(ctx, desc, jac);
      out.socle = ladder.bound;
      out.socle_evidence = ladder.evidence;
      if (ctx.recorded) {
        const auto it = ctx.recorded->socle.find(key);
        if (it != ctx.recorded->socle.end()) {
          const bool stronger =
              out.socle == SocleBound::Unknown ||
              (out.socle == SocleBound::AtMostTwo &&
               it->second.first != SocleBound::AtMostTwo);
          if (stronger) {
            out.socle = it->second.first;
            out.socle_evidence = "recorded: " + it->second.second;
          }
        }
      }
    }
  }
  return out;
}

std::vector<Rat> candidate_s_values(const RootDatum& datum, int node, int k) {
  DPSDescriptor probe;
  probe.nodes = {node};
  probe.s = {Rat(0)};
  probe.chi_pow = {1 % k};
  probe.k = k;
  const std::vector<Rat> base = initial_exponent(datum, probe).re;

  // The pairing of the initial exponent against a root beta is
  // (base . beta) + s * beta[node], so each root contributes the s-values
  // where that affine function hits 0 (a stabilizer candidate) or +-1 with
  // trivial twist (a regular reducibility point; the twist at the node is
  // chi^{beta[node]}, trivial iff k divides beta[node]).
  std::set<Rat> candidates;
  for (const auto& beta : datum.positive_roots) {
    const int c = beta[node];
    if (c == 0) continue;
    Rat dot(0);
    for (int i = 0; i < datum.rank; ++i)
      if (beta[i] != 0) dot += Rat(beta[i]) * base[i];
    candidates.insert(-dot / c);
    if (c % k == 0) {
      candidates.insert((Rat(1) - dot) / c);
      candidates.insert((Rat(-1) - dot) / c);
    }
  }

  std::vector<Rat> out;
  for (const Rat& s : candidates) {
    if (s > Rat(0)) continue;
    probe.s = {s};
    if (!is_regular(datum, probe) || regular_reducible(datum, probe))
      out.push_back(s);
  }
  std::sort(out.begin(), out.end(), std::greater<Rat>());
  return out;
}

int max_interesting_chi_order(const RootDatum& datum, int node) {
  return datum.positive_roots.back()[node];
}

ReducibilityTable reducibility_table(const AnalysisContext& ctx, int node) {
  if (!ctx.datum) throw std::invalid_argument("analysis context lacks a datum");
  const RootDatum& datum = *ctx.datum;
  ReducibilityTable table;
  table.node = node;
  const int k_max = max_interesting_chi_order(datum, node);
  std::vector<std::vector<Rat>> per_order;
  std::set<Rat> columns;
  for (int k = 1; k <= k_max; ++k) {
    table.chi_orders.push_back(k);
    per_order.push_back(candidate_s_values(datum, node, k));
    columns.insert(per_order.back().begin(), per_order.back().end());
  }
  table.columns.assign(columns.begin(), columns.end());
  std::sort(table.columns.begin(), table.columns.end());

  table.cells.assign(per_order.size(),
                     std::vector<CellVerdict>(table.columns.size(),
                                              CellVerdict::Blank));
  for (std::size_t row = 0; row < per_order.size(); ++row) {
    const int k = table.chi_orders[row];
    for (std::size_t col = 0; col < table.columns.size(); ++col) {
      const Rat& s = table.columns[col];
      if (std::find(per_order[row].begin(), per_order[row].end(), s) ==
          per_order[row].end())
        continue;
      DPSDescriptor desc;
      desc.nodes = {node};
      desc.s = {s};
      desc.chi_pow = {1 % k};
      desc.k = k;
      const CaseAnalysis a = analyze_case(ctx, desc, false);
      if (a.verdict == CellVerdict::Blank)
        throw std::runtime_error("unresolved cell " + render_descriptor(desc));
      table.cells[row][col] = a.verdict;
    }
  }
  return table;
}

} // namespace dps
