#pragma once

#include "dps/branching.hpp"
#include "dps/descriptor.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dps {

// Nodes where lambda's real pairing vanishes, plus display strings for the
// induced subdiagram type ("A_2 x A_2 x A_1") and the derived subgroup of
// the corresponding standard Levi ("SL_3 x SL_3 x SL_2"), factors sorted by
// descending rank.
struct ThetaZeroSet {
  std::vector<int> theta;  // 0-based, ascending
  std::string cartan_type;
  std::string levi_derived;
};

ThetaZeroSet theta_zero_set(const RootDatum& datum,
                            const TorusCharacter& lambda);

// Length of the restriction of the torus-induced anti-dominant character to
// the derived subgroup of the zero-set Levi, for the five ramified cases it
// was worked out for. Throws std::out_of_range on any other descriptor.
int restriction_length_lookup(const RootDatum& datum,
                              const DPSDescriptor& desc);

// Existence of a unique irreducible subquotient containing the anti-dominant
// exponent: automatic for k = 1; for the five recorded ramified cases the
// computable ingredients are re-verified live (zero-set shape, strict
// negativity off the zero-set, restriction length).
struct UniqueAdCheck {
  bool covered = false;  // false: case outside the recorded coverage
  bool confirmed = false;
  std::string detail;
};
UniqueAdCheck unique_ad_subquotient_check(const RootDatum& datum,
                                          const DPSDescriptor& desc,
                                          int threads = 1,
                                          const std::string& cache_dir = "");

// Intertwining-kernel dimension arithmetic: for each listed node, the
// recorded constituent kernel dimension times the live coset count.
struct KernelDimensionRow {
  int node = 0;  // 0-based
  std::uint64_t kernel_dim = 0;   // recorded input, never computed here
  std::uint64_t coset_count = 0;  // |W^{M_j, T}|, computed live
  std::uint64_t product = 0;
  std::string note;
};
std::vector<KernelDimensionRow> kernel_dimension_table(const RootDatum& datum);

// d divides the multiplicity of lambda in ms (true when lambda is absent).
bool divisibility_check(const ExponentMultiset& ms, const TorusCharacter& lambda,
                        std::uint64_t d);

// One step of an embedding chain: inside the Levi that omits node i_k, the
// data induced from the pair Levis {i_k, j_k} and {i_k, i_next} (with the
// stated torus characters) must be invert partners and irreducible.
struct ChainRow {
  int i_k = 0, j_k = 0;     // 0-based
  TorusCharacter char_k;    // r_T of the pair datum {i_k, j_k}
  int i_next = 0;
  TorusCharacter char_next; // r_T of the pair datum {i_k, i_next}
};

struct ChainCheck {
  bool ok = false;
  std::string detail;  // first failed check, or a summary when ok
};

// Verifies: both characters round-trip through their reconstructed pair
// data; the two Levi-level Jacquet multisets (inside the Levi omitting i_k)
// agree with equal mass; the Levi's diagram involution carries j_k to
// i_next; and the Levi-level datum is irreducible by the branching test.
ChainCheck chain_step_verify(const RootDatum& datum, const ChainRow& row,
                             const RuleDatabase& db, int threads = 1);

} // namespace dps
