#include "dps/branching.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace dps {

namespace {

BranchCondition cond_eq(const Rat& v) {
  return {v == Rat(0) ? BranchCondition::Kind::EqZero
                      : BranchCondition::Kind::EqRat,
          v};
}

std::vector<BranchCondition> conds_from_pattern(
    const std::vector<long long>& values) {
  std::vector<BranchCondition> out;
  out.reserve(values.size());
  for (long long v : values) out.push_back(cond_eq(Rat(v)));
  return out;
}

using Outputs = std::vector<std::pair<std::vector<int>, std::uint64_t>>;

void sort_outputs(Outputs& outputs) {
  std::sort(outputs.begin(), outputs.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size())
      return a.first.size() < b.first.size();
    return a.first < b.first;
  });
}

BranchRule make_rule(std::string name, const std::string& group,
                     std::vector<BranchCondition> conds, bool sign_symmetric,
                     Outputs outputs) {
  BranchRule r;
  r.name = std::move(name);
  r.pattern = build_root_datum(group);
  if (static_cast<int>(conds.size()) != r.pattern.rank)
    throw std::logic_error("rule " + r.name + ": condition count mismatch");
  r.conditions = std::move(conds);
  r.sign_symmetric = sign_symmetric;
  sort_outputs(outputs);
  r.outputs = std::move(outputs);
  if (r.outputs.empty() || !r.outputs.front().first.empty())
    throw std::logic_error("rule " + r.name + ": missing identity word");
  r.identity_mult = r.outputs.front().second;
  return r;
}

// Does the pairing (re, chi^fin) satisfy the condition, optionally with the
// rational value negated (the sign-symmetric variant)?
bool condition_holds(const BranchCondition& c, const Rat& re, int fin, int k,
                     bool negated) {
  switch (c.kind) {
    case BranchCondition::Kind::EqRat:
      return fin == 0 && re == (negated ? -c.value : c.value);
    case BranchCondition::Kind::EqZero:
      return fin == 0 && re == Rat(0);
    case BranchCondition::Kind::EqPmOne:
      return fin == 0 && (re == Rat(1) || re == Rat(-1));
    case BranchCondition::Kind::NeqPmOne:
      // The excluded pairings are the SL_2 reducibility points: |.|^{+-1}
      // and the nontrivial quadratic twists (order-2 finite part with zero
      // real part, where the two constituents have one exponent each).
      if (fin == 0 && (re == Rat(1) || re == Rat(-1))) return false;
      if (fin != 0 && re == Rat(0) && (2 * fin) % k == 0) return false;
      return true;
    case BranchCondition::Kind::Twisted:
      return fin != 0;
    case BranchCondition::Kind::Quadratic:
      return fin != 0 && (2 * fin) % k == 0 && re == Rat(0);
    case BranchCondition::Kind::NeitherWall:
      return fin == 0 && re != Rat(1) && re != Rat(-1);
  }
  return false;
}

}  // namespace

std::uint64_t BranchRule::output_mass() const {
  std::uint64_t total = 0;
  for (const auto& [word, mult] : outputs) total += mult;
  return total;
}

std::vector<BranchRule> standard_rules(int max_an) {
  std::vector<BranchRule> rules;

  // Single node, generic pairing: the full two-element orbit is forced.
  rules.push_back(make_rule(
      "A1(generic)", "A1",
      {{BranchCondition::Kind::NeqPmOne, Rat(0)}}, false,
      {{{}, 1}, {{0}, 1}}));

  // A_2 with a chi-twisted node. A twisted pairing is never |.|^{+-1}, so
  // the only possible segment link sits on the untwisted node, and a twist
  // by a finite-order character cannot permute a value multiset that has
  // exactly one untwisted member. The full principal series is therefore
  // irreducible and the whole six-element orbit is forced; repeated words
  // collapse onto stabilized characters at application time.
  const Outputs full_a2 = {{{}, 1},    {{0}, 1},    {{1}, 1},
                           {{0, 1}, 1}, {{1, 0}, 1}, {{0, 1, 0}, 1}};
  rules.push_back(make_rule(
      "A2(s,chi)", "A2",
      {{BranchCondition::Kind::NeitherWall, Rat(0)},
       {BranchCondition::Kind::Twisted, Rat(0)}},
      false, Outputs(full_a2)));

  // Both nodes carry the order-two twist with zero real part: the compound
  // pairing is trivial, the value multiset is one untwisted value against
  // two twisted ones, and no finite-order twist permutes it. Same forcing
  // as above.
  rules.push_back(make_rule(
      "A2(chi,chi)", "A2",
      {{BranchCondition::Kind::Quadratic, Rat(0)},
       {BranchCondition::Kind::Quadratic, Rat(0)}},
      false, Outputs(full_a2)));

  // A_2 with |.|^{+-1} on the first node and a twist on the second: the
  // series has exactly two constituents, split along the rank-one wall, and
  // the twisted coordinate pins which constituent holds the matched
  // character (its three Jacquet exponents are the coset ladder below; the
  // other constituent's exponents all differ from them in the chi part).
  rules.push_back(make_rule(
      "A2(1,chi)", "A2",
      {{BranchCondition::Kind::EqPmOne, Rat(1)},
       {BranchCondition::Kind::Twisted, Rat(0)}},
      false, {{{}, 1}, {{1}, 1}, {{0, 1}, 1}}));

  // One-parameter family: (+-1, 0, ..., 0) forces the coset ladder of
  // W(A_n)/W(A_{n-1}) with coefficients (n - l) (n-1)!.
  for (int n = 2; n <= max_an; ++n) {
    std::vector<BranchCondition> conds(
        static_cast<std::size_t>(n),
        BranchCondition{BranchCondition::Kind::EqZero, Rat(0)});
    conds[0] = {BranchCondition::Kind::EqPmOne, Rat(1)};
    std::uint64_t fact = 1;
    for (int i = 2; i < n; ++i) fact *= i;  // (n-1)!
    Outputs outputs;
    for (int l = 0; l < n; ++l) {
      std::vector<int> word;
      for (int j = l - 1; j >= 0; --j) word.push_back(j);
      outputs.push_back({std::move(word),
                         static_cast<std::uint64_t>(n - l) * fact});
    }
    rules.push_back(make_rule("A" + std::to_string(n) + "(1,0...)",
                              "A" + std::to_string(n), std::move(conds), false,
                              std::move(outputs)));
  }

  rules.push_back(make_rule(
      "A3(1,0,-1)", "A3", conds_from_pattern({1, 0, -1}), true,
      {{{}, 2}, {{0}, 1}, {{2}, 1}, {{0, 2}, 2}}));
  rules.push_back(make_rule(
      "A3(1,0,1)", "A3", conds_from_pattern({1, 0, 1}), true,
      {{{}, 2}, {{0}, 1}, {{2}, 1}}));

  rules.push_back(make_rule(
      "A4(0,1,0,0)", "A4", conds_from_pattern({0, 1, 0, 0}), true,
      {{{}, 12}, {{1}, 8}, {{2, 1}, 4}, {{0, 1}, 4}, {{0, 2, 1}, 2}}));
  rules.push_back(make_rule(
      "A4(1,0,0,-1)", "A4", conds_from_pattern({1, 0, 0, -1}), true,
      {{{}, 6},
       {{0}, 4},
       {{3}, 4},
       {{0, 3}, 4},
       {{2, 3}, 2},
       {{1, 0}, 2},
       {{3, 1, 0}, 4},
       {{0, 2, 3}, 4}}));

  rules.push_back(make_rule(
      "A5(0,0,1,0,0)", "A5", conds_from_pattern({0, 0, 1, 0, 0}), true,
      {{{}, 36}, {{2}, 24}, {{1, 2}, 12}, {{3, 2}, 12}, {{1, 3, 2}, 6}}));
  rules.push_back(make_rule(
      "A5(1,0,0,-1,0)", "A5", conds_from_pattern({1, 0, 0, -1, 0}), true,
      {{{}, 12},
       {{4, 3, 1, 0}, 12},
       {{0}, 8},
       {{3}, 8},
       {{0, 3}, 8},
       {{3, 1, 0}, 8},
       {{0, 2, 3}, 8},
       {{4, 3, 0}, 8},
       {{2, 3}, 4},
       {{4, 3}, 4},
       {{4, 0}, 4},
       {{4, 0, 2, 3}, 4},
       {{4, 2, 3}, 2}}));

  rules.push_back(make_rule(
      "D4(0,1,0,0)", "D4", conds_from_pattern({0, 1, 0, 0}), true,
      {{{}, 8},
       {{1}, 5},
       {{0, 1}, 2},
       {{2, 1}, 2},
       {{3, 1}, 2},
       {{0, 2, 1}, 1},
       {{0, 3, 1}, 1},
       {{2, 3, 1}, 1}}));
  rules.push_back(make_rule(
      "D4(1,0,0,-1)", "D4", conds_from_pattern({1, 0, 0, -1}), true,
      {{{}, 12},
       {{0}, 8},
       {{3}, 8},
       {{0, 3}, 12},
       {{1, 3}, 4},
       {{1, 0}, 4}}));

  rules.push_back(make_rule(
      "D5(0,0,0,0,1)", "D5", conds_from_pattern({0, 0, 0, 0, 1}), true,
      {{{}, 120},
       {{4}, 96},
       {{2, 4}, 72},
       {{1, 2, 4}, 48},
       {{3, 2, 4}, 48},
       {{3, 1, 2, 4}, 32},
       {{0, 1, 2, 4}, 24},
       {{2, 1, 3, 2, 4}, 16},
       {{0, 1, 3, 2, 4}, 16},
       {{2, 0, 1, 3, 2, 4}, 8}}));
  rules.push_back(make_rule(
      "D5(0,0,1,0,0)", "D5", conds_from_pattern({0, 0, 1, 0, 0}), true,
      {{{}, 24},
       {{2}, 16},
       {{1, 2}, 8},
       {{3, 2}, 8},
       {{4, 2}, 8},
       {{3, 4, 2}, 4},
       {{1, 4, 2}, 4},
       {{1, 3, 2}, 4},
       {{3, 1, 4, 2}, 2},
       {{2, 3, 1, 4, 2}, 2}}));

  return rules;
}

namespace {

// Builds the (base, outputs) presentation of a multiset all of whose members
// lie in one W-orbit: base is the unique anti-dominant member, words replay
// base -> member.
BranchRule rule_from_multiset(const RootDatum& sub, const ExponentMultiset& ms,
                              const std::string& name) {
  const std::vector<int> levi = all_nodes(sub);
  const auto ad = ms.antidominant_members(levi);
  if (ad.size() != 1)
    throw std::logic_error("rule " + name + ": expected one anti-dominant exponent, found " +
                           std::to_string(ad.size()));
  const TorusCharacter& base = ad.front();
  BranchRule r;
  r.name = name;
  r.pattern = sub;
  r.sign_symmetric = true;
  for (int i = 0; i < sub.rank; ++i) {
    if (base.fin[i] != 0)
      throw std::logic_error("rule " + name + ": ramified base exponent");
    r.conditions.push_back(cond_eq(base.re[i]));
  }
  Outputs outputs;
  for (const auto& [member, mult] : ms.counts) {
    auto [image, word] = antidominantize(sub, member, levi);
    if (!(image == base))
      throw std::logic_error("rule " + name + ": exponent outside the base orbit");
    std::reverse(word.begin(), word.end());
    outputs.push_back({std::move(word), mult});
  }
  sort_outputs(outputs);
  r.outputs = std::move(outputs);
  r.identity_mult = ms.mult(base);
  if (r.outputs.front().first.empty() == false ||
      r.outputs.front().second != r.identity_mult)
    throw std::logic_error("rule " + name + ": identity word mismatch");
  return r;
}

}  // namespace

BranchRule derive_rule_from_dps(const RootDatum& sub, const DPSDescriptor& desc,
                                const std::string& name) {
  if (desc.is_pair())
    throw std::invalid_argument("rule derivation needs a one-node datum");
  if (desc.k != 1)
    throw std::invalid_argument("rule derivation is implemented for unramified data");
  // Deriving from a reducible datum would merge the multisets of several
  // constituents into one bogus rule. The one reducible datum that shows up
  // in this area is handled by d6_special_rule instead.
  if (sub.id.str() == "D6" && render_descriptor(desc) == "[3,0,1]")
    throw std::invalid_argument(
        "the D6 [3,0,1] datum is reducible; use d6_special_rule");
  const std::vector<int> levi = all_nodes(sub);
  const std::vector<int> theta = theta_of(sub, desc);
  const ExponentMultiset jac = orbit_multiset(
      sub, levi, theta, initial_exponent(sub, desc), 1);
  return rule_from_multiset(sub, jac, name);
}

BranchRule d6_special_rule() {
  const RootDatum d6 = build_root_datum("D6");
  const auto desc = parse_descriptor(d6, "[3,0,1]");
  if (!desc) throw std::logic_error("bad built-in descriptor");
  const std::vector<int> levi = all_nodes(d6);
  ExponentMultiset jac = orbit_multiset(d6, levi, theta_of(d6, *desc),
                                        initial_exponent(d6, *desc), 1);
  if (jac.mass() != 160)
    throw std::logic_error("D6 rule: datum mass " + std::to_string(jac.mass()));
  // The non-spherical constituent carries these five exponent translates of
  // the initial exponent, each with multiplicity one.
  const TorusCharacter lambda0 = initial_exponent(d6, *desc);
  const std::vector<std::vector<int>> removed = {
      {}, {2}, {1, 2}, {3, 2}, {1, 3, 2}};
  std::set<std::string> seen;
  for (const auto& word : removed) {
    const TorusCharacter target = apply_word(d6, lambda0, word);
    if (!seen.insert(render_character(target)).second)
      throw std::logic_error("D6 rule: repeated removed exponent");
    auto it = jac.counts.find(target);
    if (it == jac.counts.end() || it->second == 0)
      throw std::logic_error("D6 rule: removed exponent not present");
    if (--it->second == 0) jac.counts.erase(it);
  }
  BranchRule r = rule_from_multiset(d6, jac, "D6(-1,0,0,-1,0,0)");
  const std::vector<Rat> expected = {Rat(-1), Rat(0), Rat(0),
                                     Rat(-1), Rat(0), Rat(0)};
  for (int i = 0; i < d6.rank; ++i)
    if (r.conditions[i].value != expected[i])
      throw std::logic_error("D6 rule: unexpected base pattern");
  if (r.output_mass() != 155)
    throw std::logic_error("D6 rule: mass " + std::to_string(r.output_mass()));
  return r;
}

const RuleDatabase& RuleDatabase::standard() {
  static const RuleDatabase db = [] {
    RuleDatabase out;
    out.rules = standard_rules(7);
    out.rules.push_back(d6_special_rule());

    const RootDatum e6 = build_root_datum("E6");
    const RootDatum e7 = build_root_datum("E7");
    const auto derive = [](const RootDatum& sub, const std::string& text) {
      const auto desc = parse_descriptor(sub, text);
      if (!desc) throw std::logic_error("bad built-in descriptor " + text);
      return derive_rule_from_dps(sub, *desc,
                                  sub.id.str() + "[" + text.substr(1));
    };
    out.rules.push_back(derive(e6, "[5,-1/2,1]"));
    out.rules.push_back(derive(e6, "[3,-1/2,1]"));
    out.rules.push_back(derive(e7, "[4,0,1]"));
    out.rules.push_back(derive(e7, "[5,0,1]"));

    // The ramified-adjacent E7 rule is named inconsistently across sources
    // ([5,-3/2,1] vs [6,-3/2,1]); the pairing pattern of its base exponent,
    // (0,0,0,-1,0,-1,-1), is stated unambiguously. Derive both candidates
    // and keep the matching one.
    const std::vector<Rat> wanted = {Rat(0), Rat(0), Rat(0), Rat(-1),
                                     Rat(0), Rat(-1), Rat(-1)};
    const auto matches_wanted = [&](const BranchRule& rule) {
      for (int i = 0; i < e7.rank; ++i)
        if (rule.conditions[i].value != wanted[i]) return false;
      return true;
    };
    std::vector<BranchRule> candidates;
    for (const std::string text : {"[5,-3/2,1]", "[6,-3/2,1]"}) {
      try {
        BranchRule rule = derive(e7, text);
        if (matches_wanted(rule)) candidates.push_back(std::move(rule));
      } catch (const std::logic_error&) {
        // A non-unique anti-dominant exponent disqualifies the candidate.
      }
    }
    if (candidates.size() != 1)
      throw std::logic_error("E7 -3/2 rule resolution failed: " +
                             std::to_string(candidates.size()) + " matches");
    out.rules.push_back(std::move(candidates.front()));
    return out;
  }();
  return db;
}

namespace {

// A rule instantiated along one embedding of its pattern diagram.
struct Matcher {
  const BranchRule* rule = nullptr;
  std::vector<int> nodes;                // pattern node -> ambient node
  std::vector<std::vector<int>> words;   // outputs rewritten in ambient letters
};

std::vector<Matcher> build_matchers(const RootDatum& datum,
                                    const std::vector<int>& levi,
                                    const RuleDatabase& db) {
  std::vector<Matcher> matchers;
  for (const BranchRule& rule : db.rules) {
    if (rule.pattern.rank > static_cast<int>(levi.size())) continue;
    for (auto& emb : subdiagram_embeddings(datum, levi, rule.pattern)) {
      Matcher m;
      m.rule = &rule;
      m.words.reserve(rule.outputs.size());
      for (const auto& [word, mult] : rule.outputs) {
        std::vector<int> ambient;
        ambient.reserve(word.size());
        for (int letter : word) ambient.push_back(emb[letter]);
        m.words.push_back(std::move(ambient));
      }
      m.nodes = std::move(emb);
      matchers.push_back(std::move(m));
    }
  }
  return matchers;
}

bool matcher_applies(const Matcher& m, const TorusCharacter& lambda,
                     bool negated) {
  const auto& conds = m.rule->conditions;
  for (std::size_t i = 0; i < conds.size(); ++i) {
    const int node = m.nodes[i];
    if (!condition_holds(conds[i], lambda.re[node], lambda.fin[node],
                         lambda.k, negated))
      return false;
  }
  return true;
}

}  // namespace

FixpointResult dominated_fixpoint(const RootDatum& datum,
                                  const std::vector<int>& levi,
                                  const ExponentMultiset& cap,
                                  const ExponentMultiset& f0,
                                  const RuleDatabase& db,
                                  const FixpointOptions& opts) {
  FixpointResult res;
  res.f.k = cap.k;
  const auto fail = [&res](std::string message) {
    res.consistent = false;
    res.error = std::move(message);
  };

  const std::vector<Matcher> matchers = build_matchers(datum, levi, db);

  // |W_Theta(lambda)| for the zero-pairing subdiagram inside the levi.
  const auto orthogonality_order = [&](const TorusCharacter& lam) {
    std::vector<int> zero;
    for (int n : levi)
      if (lam.fin[n] == 0 && lam.re[n] == Rat(0)) zero.push_back(n);
    return weyl_order(datum, zero);
  };

  std::vector<TorusCharacter> work;
  std::unordered_set<TorusCharacter, TorusCharacterHash> queued;
  for (const auto& [lam, value] : f0.counts) {
    if (value == 0) continue;
    res.f.counts[lam] = value;
    if (queued.insert(lam).second) work.push_back(lam);
  }

  std::mt19937_64 rng(opts.shuffle_seed);
  while (!work.empty()) {
    std::size_t pick = work.size() - 1;
    if (opts.shuffle_seed != 0) pick = rng() % work.size();
    std::swap(work[pick], work.back());
    const TorusCharacter lam = std::move(work.back());
    work.pop_back();
    queued.erase(lam);

    const std::uint64_t cap_here = cap.mult(lam);
    const std::uint64_t r = orthogonality_order(lam);
    std::uint64_t value = res.f.counts[lam];
    value = (value + r - 1) / r * r;
    if (value > cap_here) {
      fail("orthogonality rounding exceeds the restriction at " +
           render_character(lam));
      return res;
    }
    res.f.counts[lam] = value;

    for (const Matcher& m : matchers) {
      for (int pass = 0; pass < (m.rule->sign_symmetric ? 2 : 1); ++pass) {
        const bool negated = pass == 1;
        if (!matcher_applies(m, lam, negated)) continue;
        if (++res.updates > opts.max_updates) {
          fail("update budget exceeded");
          return res;
        }
        // Several words can land on the same exponent when lambda is
        // non-regular for the pattern; their contributions add up within
        // one copy of the matched irreducible Levi constituent. Each such
        // copy holds per_copy[lam] occurrences of lambda itself (the
        // identity word plus any word stabilizing lambda), so covering
        // `value` occurrences takes ceil(value / per_copy[lam]) copies.
        std::unordered_map<TorusCharacter, std::uint64_t, TorusCharacterHash>
            per_copy;
        for (std::size_t i = 0; i < m.words.size(); ++i)
          per_copy[apply_word(datum, lam, m.words[i])] +=
              m.rule->outputs[i].second;
        const std::uint64_t base_mass = per_copy.at(lam);
        const std::uint64_t scale = (value + base_mass - 1) / base_mass;
        for (auto& [target, per_copy_value] : per_copy) {
          const std::uint64_t forced_value = scale * per_copy_value;
          auto [it, inserted] = res.f.counts.try_emplace(target, 0);
          if (forced_value <= it->second) continue;
          if (forced_value > cap.mult(target)) {
            fail("rule " + m.rule->name + " exceeds the restriction at " +
                 render_character(target));
            return res;
          }
          it->second = forced_value;
          if (queued.insert(target).second) work.push_back(target);
        }
      }
    }
  }

  std::erase_if(res.f.counts, [](const auto& kv) { return kv.second == 0; });
  return res;
}

FixpointResult dominated_fixpoint(const RootDatum& datum,
                                  const std::vector<int>& levi,
                                  const ExponentMultiset& cap,
                                  const TorusCharacter& seed,
                                  const RuleDatabase& db,
                                  const FixpointOptions& opts) {
  ExponentMultiset f0;
  f0.k = cap.k;
  f0.counts[seed] = 1;
  return dominated_fixpoint(datum, levi, cap, f0, db, opts);
}

namespace {

IrreducibilityReport irreducibility_over(const RootDatum& datum,
                                         const std::vector<int>& levi,
                                         const std::vector<int>& theta,
                                         const TorusCharacter& lambda0,
                                         const ExponentMultiset& cap,
                                         const RuleDatabase& db,
                                         const FixpointOptions& opts) {
  IrreducibilityReport rep;
  rep.lambda0 = lambda0;
  rep.lambda1 = apply_word(datum, lambda0, longest_coset_word(datum, levi, theta));
  rep.mult0 = cap.mult(rep.lambda0);
  rep.mult1 = cap.mult(rep.lambda1);
  rep.seeds = cap.antidominant_members(levi);

  std::vector<FixpointResult> runs(rep.seeds.size());
  FixpointOptions run_opts = opts;
  run_opts.threads = 1;  // each run is single-threaded; seeds run in parallel
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < rep.seeds.size();
         i = next.fetch_add(1))
      runs[i] = dominated_fixpoint(datum, levi, cap, rep.seeds[i], db, run_opts);
  };
  const int workers = std::max(
      1, std::min<int>(opts.threads, static_cast<int>(rep.seeds.size())));
  if (workers > 1) {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  } else {
    worker();
  }

  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (!runs[i].consistent)
      throw std::runtime_error("fixpoint from " +
                               render_character(rep.seeds[i]) + " failed: " +
                               runs[i].error);
    const std::uint64_t at0 = runs[i].f.mult(rep.lambda0);
    const std::uint64_t at1 = runs[i].f.mult(rep.lambda1);
    rep.best0 = std::max(rep.best0, at0);
    rep.best1 = std::max(rep.best1, at1);
    if (!rep.winning_seed && at0 == rep.mult0 && at1 == rep.mult1) {
      rep.irreducible = true;
      rep.winning_seed = rep.seeds[i];
    }
  }
  return rep;
}

}  // namespace

IrreducibilityReport irreducibility_test(const RootDatum& datum,
                                         const std::vector<int>& levi,
                                         const std::vector<int>& theta,
                                         const TorusCharacter& lambda0,
                                         const RuleDatabase& db,
                                         const FixpointOptions& opts) {
  const ExponentMultiset cap =
      orbit_multiset(datum, levi, theta, lambda0, opts.threads);
  return irreducibility_over(datum, levi, theta, lambda0, cap, db, opts);
}

IrreducibilityReport irreducibility_test(const RootDatum& datum,
                                         const std::vector<int>& levi,
                                         const std::vector<int>& theta,
                                         const TorusCharacter& lambda0,
                                         const ExponentMultiset& cap,
                                         const RuleDatabase& db,
                                         const FixpointOptions& opts) {
  return irreducibility_over(datum, levi, theta, lambda0, cap, db, opts);
}

IrreducibilityReport irreducibility_test(const RootDatum& datum,
                                         const DPSDescriptor& desc,
                                         const RuleDatabase& db,
                                         const FixpointOptions& opts) {
  const ExponentMultiset cap =
      jacquet_multiset(datum, desc, opts.threads, opts.cache_dir);
  return irreducibility_over(datum, all_nodes(datum), theta_of(datum, desc),
                             initial_exponent(datum, desc), cap, db, opts);
}

} // namespace dps
