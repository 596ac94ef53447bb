#pragma once

#include "dps/branching.hpp"
#include "dps/descriptor.hpp"
#include "dps/orbit.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dps {

// Shared-subquotient comparison: the datum is confirmed reducible when some
// anti-dominant exponent of its Jacquet multiset also occurs in the witness
// multiset while the witness multiset does not dominate it pointwise.
struct TadicReport {
  bool reducible_confirmed = false;
  // Anti-dominant exponents common to both multisets, render-sorted.
  std::vector<TorusCharacter> shared_antidominant;
  std::optional<TorusCharacter> excess_exponent;  // mult(desc) > mult(witness)
  std::uint64_t excess_mult_desc = 0, excess_mult_witness = 0;
  // The auxiliary datum that produced this report. Replacing chi by another
  // primitive power gives an equally valid auxiliary representation, so the
  // test may confirm with adjusted powers; this records the adjusted form.
  DPSDescriptor witness_used;
};

// Tries the witness as given and then with its chi powers scaled by each
// totative of k; returns the first confirming report (or the unadjusted
// report if none confirms). Throws std::invalid_argument when desc and
// witness render identically.
TadicReport tadic_test(const RootDatum& datum, const DPSDescriptor& desc,
                       const DPSDescriptor& witness, int threads = 1,
                       const std::string& cache_dir = "");

// Verdict for a regular datum: reducible iff some positive root outside the
// Levi pairs to (+-1, trivial) against the initial exponent.
bool regular_reducible(const RootDatum& datum, const DPSDescriptor& desc);

struct WitnessSearchOptions {
  int threads = 1;
  std::string cache_dir;
  bool include_pairs = false;  // bounded grid over pair data; off by default
  long long max_denominator = 12;
  long long max_abs_numerator = 12;  // |s| <= 12 on the grid
  std::size_t max_results = 0;  // stop after this many confirmations; 0 = all
};

// Maximal-parabolic candidates [j,t,chi^l] with the same invariant norm as
// the initial exponent (a quadratic in t per node and totative power), then
// an anti-dominant orbit prefilter, then the full multiset test. Pair data
// are scanned on the configured grid only when include_pairs is set; the
// search is explicitly bounded and non-exhaustive there. Results are sorted
// by rendered descriptor and every report confirms reducibility.
std::vector<std::pair<DPSDescriptor, TadicReport>> witness_search(
    const RootDatum& datum, const DPSDescriptor& desc,
    const WitnessSearchOptions& opts = {});

} // namespace dps
