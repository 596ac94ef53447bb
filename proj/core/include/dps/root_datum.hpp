#pragma once

#include "dps/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dps {

enum class Series : char { A = 'A', D = 'D', E = 'E' };

struct GroupId {
  Series series = Series::A;
  int rank = 1;

  std::string str() const;
  bool operator==(const GroupId&) const = default;
};

// "A3", "D5", "E8" -> GroupId. Throws std::invalid_argument on anything else
// (simply-laced only; A_n n>=1, D_n n>=4, E_6/7/8).
GroupId parse_group(const std::string& name);

// Root system of a simply-laced diagram. Nodes are 0-based internally; all
// text I/O uses 1-based Bourbaki labels (E_n: the chain is 1-3-4-...-n with
// node 2 hanging off node 4).
struct RootDatum {
  GroupId id;
  int rank = 0;
  // cartan[i][j] = <alpha_i, alpha_j^vee>; symmetric here.
  std::vector<std::vector<int>> cartan;
  // Positive roots in simple-root coordinates, listed by increasing height.
  std::vector<std::vector<int>> positive_roots;
  // inverse_cartan[i][j], exact. Used by the W-invariant norm.
  std::vector<std::vector<Rat>> inverse_cartan;

  bool adjacent(int i, int j) const { return i != j && cartan[i][j] != 0; }
  int root_count() const { return 2 * static_cast<int>(positive_roots.size()); }
};

RootDatum build_root_datum(GroupId id);
inline RootDatum build_root_datum(const std::string& name) {
  return build_root_datum(parse_group(name));
}

// A connected component of the subdiagram induced on a node subset,
// classified by type. `nodes` lists the component's ambient nodes in the
// standard labeling order of the classified type.
struct LeviComponent {
  GroupId type;
  std::vector<int> nodes;
};

std::vector<LeviComponent> levi_components(const RootDatum& datum,
                                           const std::vector<int>& nodes);

// |W| for one connected type: A_n (n+1)!, D_n 2^(n-1) n!, E6/E7/E8.
std::uint64_t weyl_order(GroupId id);
// |W_Theta| for the (possibly disconnected) subdiagram on `nodes`.
std::uint64_t weyl_order(const RootDatum& datum, const std::vector<int>& nodes);

// Number of positive roots supported on `nodes` (the Levi subsystem).
std::size_t positive_root_count(const RootDatum& datum,
                                const std::vector<int>& nodes);

// All injective maps pattern-node -> ambient-node that induce the pattern
// diagram (edges and non-edges both preserved) inside the subdiagram spanned
// by `active`. Diagram automorphisms of the pattern show up as distinct maps.
std::vector<std::vector<int>> subdiagram_embeddings(
    const RootDatum& ambient, const std::vector<int>& active,
    const RootDatum& pattern);

// Complement of `nodes` in {0..rank-1}, ascending.
std::vector<int> complement_nodes(const RootDatum& datum,
                                  const std::vector<int>& nodes);
std::vector<int> all_nodes(const RootDatum& datum);

// Image of a node under -w_0 (the diagram involution induced by the longest
// Weyl element) for a connected datum: identity for A_1, D_even, E7, E8;
// the diagram flip for A_n, D_odd, E6.
int w0_node_image(const RootDatum& datum, int node);

} // namespace dps
