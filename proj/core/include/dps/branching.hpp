#pragma once

#include "dps/descriptor.hpp"
#include "dps/orbit.hpp"
#include "dps/root_datum.hpp"
#include "dps/torus_character.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dps {

// One condition on the pairing at a pattern node.
struct BranchCondition {
  enum class Kind {
    EqRat,        // real == value and trivial chi part
    EqPmOne,      // real == +-1 and trivial chi part
    NeqPmOne,     // NOT (real == +-1 with trivial chi part)
    EqZero,       // real == 0 and trivial chi part
    Twisted,      // nontrivial chi part, any real part
    Quadratic,    // order-two chi part and zero real part
    NeitherWall,  // trivial chi part and real not in {-1, 1}
  };
  Kind kind = Kind::EqZero;
  Rat value;
};

// A branching rule: when a support character matches `conditions` along an
// embedding of `pattern` (or matches with all rational values negated, when
// sign_symmetric), the multiset {word . lambda' : (word, mult)} scaled by
// ceil(f(lambda') / identity_mult) is forced below the Jacquet restriction.
struct BranchRule {
  std::string name;
  RootDatum pattern;
  std::vector<BranchCondition> conditions;  // size pattern.rank
  bool sign_symmetric = true;
  // Pattern-local reduced words (0-based letters) with multiplicities; the
  // empty word is always present and its multiplicity is identity_mult.
  std::vector<std::pair<std::vector<int>, std::uint64_t>> outputs;
  std::uint64_t identity_mult = 1;

  std::uint64_t output_mass() const;
};

// The hand-stated rules: the single-node rule, the one-parameter family on
// A_n chains (2 <= n <= max_an), and the fixed small-diagram rules on A_3,
// A_4, A_5, D_4, D_5.
std::vector<BranchRule> standard_rules(int max_an = 7);

// Rule derived from an irreducible sub-diagram datum: base point is the
// anti-dominant exponent of its Jacquet multiset, outputs are the full
// multiset as minimal words from the base, conditions are the base's pairing
// pattern (sign-symmetric). The descriptor must be unramified (k = 1).
BranchRule derive_rule_from_dps(const RootDatum& sub, const DPSDescriptor& desc,
                                const std::string& name);

// The D_6 rule for the non-generic constituent: the Jacquet multiset of the
// k=1, s=0 node-3 datum minus the five-exponent chain
// {id, s3, s2 s3, s4 s3, s2 s4 s3} applied to its initial exponent
// (1-based labels), re-based at the anti-dominant exponent.
BranchRule d6_special_rule();

struct RuleDatabase {
  std::vector<BranchRule> rules;

  // Everything: standard + D6 + the derived E6/E7 rules. Constructed once
  // (the derivations run small orbit enumerations).
  static const RuleDatabase& standard();
};

struct FixpointOptions {
  int threads = 1;
  std::uint64_t max_updates = 50000000;
  // 0: canonical worklist order. Nonzero: pseudo-random pop order with this
  // seed. The least fixpoint is the same either way; the knob exists so the
  // order-independence property is testable.
  std::uint64_t shuffle_seed = 0;
  // Used by the descriptor overload of irreducibility_test when it computes
  // the Jacquet restriction. Empty: default cache location.
  std::string cache_dir;
};

struct FixpointResult {
  bool consistent = true;   // false: an update exceeded the cap
  std::string error;
  ExponentMultiset f;
  std::uint64_t updates = 0;
};

// Least fixpoint of the inflationary rule updates above f0, capped by
// `cap`. Order-independent; aborts with consistent=false if any update
// would exceed the cap (which a sound rule database never does on a genuine
// Jacquet restriction). Every supported value is also rounded up to a
// multiple of |W_Theta(lambda)|, the Weyl order of lambda's zero-pairing
// subdiagram (the orthogonality rule).
FixpointResult dominated_fixpoint(const RootDatum& datum,
                                  const std::vector<int>& levi,
                                  const ExponentMultiset& cap,
                                  const ExponentMultiset& f0,
                                  const RuleDatabase& db,
                                  const FixpointOptions& opts = {});

// Convenience: f0 = delta at `seed` with value 1.
FixpointResult dominated_fixpoint(const RootDatum& datum,
                                  const std::vector<int>& levi,
                                  const ExponentMultiset& cap,
                                  const TorusCharacter& seed,
                                  const RuleDatabase& db,
                                  const FixpointOptions& opts = {});

struct IrreducibilityReport {
  bool irreducible = false;       // proven; false only means "not proven"
  TorusCharacter lambda0, lambda1;
  std::uint64_t mult0 = 0, mult1 = 0;        // caps at lambda0 / lambda1
  std::uint64_t best0 = 0, best1 = 0;        // best achieved over seeds
  std::vector<TorusCharacter> seeds;
  std::optional<TorusCharacter> winning_seed;
};

// Runs the fixpoint from every anti-dominant member of the Jacquet multiset;
// irreducibility is proven when one run reaches the full multiplicity at
// both the initial and the terminal exponent.
IrreducibilityReport irreducibility_test(const RootDatum& datum,
                                         const std::vector<int>& levi,
                                         const std::vector<int>& theta,
                                         const TorusCharacter& lambda0,
                                         const RuleDatabase& db,
                                         const FixpointOptions& opts = {});

// Same, with the Jacquet restriction already computed by the caller.
IrreducibilityReport irreducibility_test(const RootDatum& datum,
                                         const std::vector<int>& levi,
                                         const std::vector<int>& theta,
                                         const TorusCharacter& lambda0,
                                         const ExponentMultiset& cap,
                                         const RuleDatabase& db,
                                         const FixpointOptions& opts = {});

IrreducibilityReport irreducibility_test(const RootDatum& datum,
                                         const DPSDescriptor& desc,
                                         const RuleDatabase& db,
                                         const FixpointOptions& opts = {});

} // namespace dps
