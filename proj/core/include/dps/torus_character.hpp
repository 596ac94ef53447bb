#pragma once

#include "dps/rational.hpp"
#include "dps/root_datum.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dps {

// An unramified-twist character of the maximal torus, recorded through its
// pairings with the simple coroots: coordinate i is <lambda, alpha_i^vee>,
// a rational (the real/unramified part) plus a power of a fixed finite-order
// character chi of order k (the residue fin[i] in [0,k)). k = 1 means
// everything is unramified.
struct TorusCharacter {
  int k = 1;
  std::vector<Rat> re;
  std::vector<int> fin;

  bool operator==(const TorusCharacter&) const = default;
};

struct TorusCharacterHash {
  std::size_t operator()(const TorusCharacter& c) const;
};

// Value of <lambda, beta^vee> for a root beta in simple-root coordinates:
// rational part and chi-power residue mod k.
struct PairingValue {
  Rat re;
  int fin = 0;

  bool is_trivial_fin() const { return fin == 0; }
  bool operator==(const PairingValue&) const = default;
};

PairingValue pair_root(const TorusCharacter& lambda,
                       const std::vector<int>& root);

// Simple reflection s_j acting on coordinates: v -> v - v[j] * cartan row j.
TorusCharacter reflect(const RootDatum& datum, TorusCharacter lambda, int j);

// Words act right-to-left: apply_word(l, {a,b,c}) = s_a(s_b(s_c(l))).
TorusCharacter apply_word(const RootDatum& datum, TorusCharacter lambda,
                          std::span<const int> word);

bool is_antidominant(const TorusCharacter& lambda,
                     const std::vector<int>& levi);

// Repeatedly reflects at the lowest levi node with positive real pairing
// until none is left. Returns the result and a word with
// apply_word(input, word) == result.
std::pair<TorusCharacter, std::vector<int>> antidominantize(
    const RootDatum& datum, TorusCharacter lambda,
    const std::vector<int>& levi);

// The W-invariant quadratic form: v^T C^{-1} v on pairing coordinates.
Rat invariant_norm(const RootDatum& datum, const TorusCharacter& lambda);

// "(-1,7/2+x^2,-1,...)" with x standing for chi; k=1 characters render the
// rationals alone. parse_character accepts the same syntax ("x" or "chi").
std::string render_character(const TorusCharacter& lambda);
TorusCharacter parse_character(const RootDatum& datum, const std::string& text,
                               int k);

} // namespace dps
