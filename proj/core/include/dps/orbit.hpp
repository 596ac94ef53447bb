#pragma once

#include "dps/root_datum.hpp"
#include "dps/torus_character.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace dps {

// Multiset of torus characters with multiplicities (exponents of a Jacquet
// restriction, or any W-orbit translate collection).
struct ExponentMultiset {
  int k = 1;
  std::unordered_map<TorusCharacter, std::uint64_t, TorusCharacterHash> counts;

  std::uint64_t mass() const;
  std::uint64_t mult(const TorusCharacter& lambda) const;
  // Members whose real pairings are <= 0 at every levi node.
  std::vector<TorusCharacter> antidominant_members(
      const std::vector<int>& levi) const;
  // Pointwise >=.
  bool dominates(const ExponentMultiset& other) const;
  bool operator==(const ExponentMultiset& other) const;
};

// |W_levi| / |W_theta| via the closed-form component orders.
std::uint64_t coset_count(const RootDatum& datum, const std::vector<int>& levi,
                          const std::vector<int>& theta);

// The multiset {w . lambda0 : w minimal-length representative of
// W_levi / W_theta}, computed by breadth-first search on marker weights:
// the marker sum of fundamental weights over levi\theta has stabilizer
// exactly W_theta, so dedup on the marker visits each coset once, and
// expanding only where the marker pairing is strictly positive reaches every
// coset along reduced words of its minimal representative (which pins the
// lambda image unambiguously). Level-synchronous; `threads` splits each
// frontier, the merge is set-semantics so results do not depend on thread
// count.
ExponentMultiset orbit_multiset(const RootDatum& datum,
                                const std::vector<int>& levi,
                                const std::vector<int>& theta,
                                const TorusCharacter& lambda0,
                                int threads = 1);

// Same walk as orbit_multiset, but only exponents listed in `only` are
// counted; everything else is visited and dropped. Lets a domination test
// against a huge orbit run in memory proportional to `only`.
ExponentMultiset orbit_multiset_restricted(
    const RootDatum& datum, const std::vector<int>& levi,
    const std::vector<int>& theta, const TorusCharacter& lambda0,
    const std::vector<TorusCharacter>& only, int threads = 1);

// Word of the longest minimal coset representative: antidominantize the
// marker over levi and replay. Its length is checked against
// |Phi+_levi| - |Phi+_theta|.
std::vector<int> longest_coset_word(const RootDatum& datum,
                                    const std::vector<int>& levi,
                                    const std::vector<int>& theta);

// Independent oracle: enumerate all of W_levi as reduced words (orbit of a
// regular weight), keep w with w(alpha_j) > 0 for all j in theta, translate
// lambda0. Only sensible for small |W|; refuses above the cap.
ExponentMultiset brute_force_orbit_multiset(const RootDatum& datum,
                                            const std::vector<int>& levi,
                                            const std::vector<int>& theta,
                                            const TorusCharacter& lambda0,
                                            std::uint64_t cap = 1000000);

} // namespace dps
