#pragma once

#include "dps/orbit.hpp"
#include "dps/rational.hpp"
#include "dps/root_datum.hpp"
#include "dps/torus_character.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dps {

// A degenerate principal series datum: one-dimensional character
// sum_m (s_m + chi^{c_m}) o omega_{node_m} of the standard Levi whose
// diagram omits `nodes` (one node: maximal parabolic; two nodes: the
// next-to-maximal case used for witness pairs). chi has order k.
struct DPSDescriptor {
  std::vector<int> nodes;    // 0-based, size 1 or 2, strictly increasing
  std::vector<Rat> s;        // parallel to nodes
  std::vector<int> chi_pow;  // parallel to nodes, reduced mod k
  int k = 1;

  bool is_pair() const { return nodes.size() == 2; }
  bool operator==(const DPSDescriptor&) const = default;
};

// "[4,-1/2,2]" or "[4,-1/2,2,1]" (optional chi power, default 1 mod k) or
// "[[3,8],[-1/2,3/2],[1,0],2]" (pair form; trailing k). 1-based node labels.
std::optional<DPSDescriptor> parse_descriptor(const RootDatum& datum,
                                              const std::string& text);
std::string render_descriptor(const DPSDescriptor& desc);

// Nodes of the inducing Levi's diagram: complement of desc.nodes.
std::vector<int> theta_of(const RootDatum& datum, const DPSDescriptor& desc);

// r_T of the inducing character: pairs exactly (-1, trivial) at every theta
// node; at node_m the value is s_m - <rho_M, alpha^vee> + chi^{c_m}, where
// rho_M is the unique vector in the rational span of the theta simple roots
// pairing to 1 against every theta coroot.
TorusCharacter initial_exponent(const RootDatum& datum,
                                const DPSDescriptor& desc);

// The partner datum with the isomorphic induced representation from the
// opposite end: nodes mapped through -w_0, s negated, chi powers negated
// mod k.
DPSDescriptor invert(const RootDatum& datum, const DPSDescriptor& desc);

// apply_word(initial_exponent(desc), longest_coset_word(...)): the image of
// the initial exponent under the longest minimal coset representative.
TorusCharacter terminal_exponent(const RootDatum& datum,
                                 const DPSDescriptor& desc);

// Order of the full stabilizer of lambda in W: the reflection subgroup of
// the real-zero roots is enumerated (its order is first bounded through the
// component closed forms; `cap` guards runaway input) and elements fixing
// the chi powers as well are counted.
std::uint64_t stabilizer_order(const RootDatum& datum,
                               const TorusCharacter& lambda,
                               std::uint64_t cap = 10000000);

bool is_regular(const RootDatum& datum, const DPSDescriptor& desc);

// For a maximal-parabolic desc and a second node j: the pair datum over
// theta \ {j} whose initial exponent is the same character (the restriction
// of the inducing character to the smaller Levi), together with that
// character.
std::pair<DPSDescriptor, TorusCharacter> restrict_to_sublevi(
    const RootDatum& datum, const DPSDescriptor& desc, int j);

// Solve for the pair datum at nodes {i,j} whose initial exponent equals
// `target` (coordinates at theta nodes must already be (-1, trivial)).
// Returns nullopt if target is not of that shape.
std::optional<DPSDescriptor> pair_descriptor_from_character(
    const RootDatum& datum, const TorusCharacter& target, int i, int j);

// Jacquet restriction to the torus: the coset-translate multiset of the
// initial exponent. The heavy computation; accepts a thread count and an
// optional on-disk cache directory ("" disables caching).
ExponentMultiset jacquet_multiset(const RootDatum& datum,
                                  const DPSDescriptor& desc, int threads = 1,
                                  const std::string& cache_dir = "");

// dim of the Iwahori-fixed subspace = total Jacquet mass.
std::uint64_t iwahori_dimension(const ExponentMultiset& jacquet);

} // namespace dps
