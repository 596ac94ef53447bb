#include "dps/root_datum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace dps {

std::string GroupId::str() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

GroupId parse_group(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad group name: " + name);
  char s = name[0];
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(name.substr(1), &used);
    if (used + 1 != name.size()) throw std::invalid_argument(name);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad group name: " + name);
  }
  GroupId id;
  switch (s) {
    case 'A': case 'a':
      id.series = Series::A;
      if (rank < 1) throw std::invalid_argument("A rank must be >= 1");
      break;
    case 'D': case 'd':
      id.series = Series::D;
      if (rank < 4) throw std::invalid_argument("D rank must be >= 4");
      break;
    case 'E': case 'e':
      id.series = Series::E;
      if (rank < 6 || rank > 8) throw std::invalid_argument("E rank must be 6, 7 or 8");
      break;
    default:
      throw std::invalid_argument("bad group name: " + name);
  }
  id.rank = rank;
  return id;
}

namespace {

std::vector<std::pair<int, int>> diagram_edges(GroupId id) {
  std::vector<std::pair<int, int>> edges;
  int n = id.rank;
  switch (id.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case Series::D:
      for (int i = 0; i + 1 < n - 1; ++i) edges.push_back({i, i + 1});
      edges.push_back({n - 3, n - 1});
      break;
    case Series::E:
      // Bourbaki: chain 1-3-4-5-...-n with 2 attached to 4 (1-based).
      edges.push_back({0, 2});
      for (int i = 2; i + 1 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({1, 3});
      break;
  }
  return edges;
}

std::vector<std::vector<Rat>> invert_matrix(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == Rat(0)) ++piv;
    if (piv == n) throw std::runtime_error("singular Cartan matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rat lead = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= lead;
      inv[col][j] /= lead;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == Rat(0)) continue;
      Rat factor = m[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[row][j] -= factor * m[col][j];
        inv[row][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

} // namespace

RootDatum build_root_datum(GroupId id) {
  RootDatum d;
  d.id = id;
  d.rank = id.rank;
  d.cartan.assign(d.rank, std::vector<int>(d.rank, 0));
  for (int i = 0; i < d.rank; ++i) d.cartan[i][i] = 2;
  for (auto [a, b] : diagram_edges(id)) {
    d.cartan[a][b] = -1;
    d.cartan[b][a] = -1;
  }

  // Positive roots by closure: simply laced, so r + alpha_i is a root exactly
  // when <r, alpha_i^vee> < 0 (and r != alpha_i itself never pairs that way
  // against its own negative here since we only walk upward in height).
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < d.rank; ++i) {
    std::vector<int> simple(d.rank, 0);
    simple[i] = 1;
    seen.insert(simple);
    frontier.push_back(simple);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& r : frontier) {
      for (int i = 0; i < d.rank; ++i) {
        int pairing = 0;
        for (int j = 0; j < d.rank; ++j) pairing += r[j] * d.cartan[j][i];
        if (pairing < 0) {
          std::vector<int> up = r;
          up[i] += 1;
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  d.positive_roots.assign(seen.begin(), seen.end());
  std::stable_sort(d.positive_roots.begin(), d.positive_roots.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     int ha = 0, hb = 0;
                     for (int x : a) ha += x;
                     for (int x : b) hb += x;
                     if (ha != hb) return ha < hb;
                     return a < b;
                   });

  std::vector<std::vector<Rat>> c(d.rank, std::vector<Rat>(d.rank));
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) c[i][j] = Rat(d.cartan[i][j]);
  d.inverse_cartan = invert_matrix(std::move(c));
  return d;
}

std::vector<LeviComponent> levi_components(const RootDatum& datum,
                                           const std::vector<int>& nodes) {
  std::set<int> pool(nodes.begin(), nodes.end());
  std::vector<LeviComponent> out;
  while (!pool.empty()) {
    // Flood-fill one component.
    std::vector<int> comp{*pool.begin()};
    pool.erase(pool.begin());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (auto it = pool.begin(); it != pool.end();) {
        if (datum.adjacent(comp[i], *it)) {
          comp.push_back(*it);
          it = pool.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());

    auto degree = [&](int v) {
      int deg = 0;
      for (int w : comp)
        if (datum.adjacent(v, w)) ++deg;
      return deg;
    };

    LeviComponent lc;
    int n = static_cast<int>(comp.size());
    int branch = -1;
    for (int v : comp)
      if (degree(v) >= 3) branch = v;

    if (branch < 0) {
      // A path: order it end to end, lower ambient endpoint first.
      lc.type = GroupId{Series::A, n};
      std::vector<int> ends;
      for (int v : comp)
        if (degree(v) <= 1) ends.push_back(v);
      int start = n == 1 ? comp[0] : std::min(ends[0], ends[1]);
      std::vector<int> order{start};
      std::set<int> used{start};
      while (static_cast<int>(order.size()) < n) {
        for (int v : comp) {
          if (!used.count(v) && datum.adjacent(order.back(), v)) {
            order.push_back(v);
            used.insert(v);
            break;
          }
        }
      }
      lc.nodes = order;
    } else {
      // One degree-3 vertex: walk the three arms, classify by arm lengths.
      std::vector<std::vector<int>> arms;
      for (int v : comp) {
        if (!datum.adjacent(v, branch)) continue;
        std::vector<int> arm{v};
        int prev = branch;
        while (true) {
          int next = -1;
          for (int w : comp)
            if (w != prev && datum.adjacent(arm.back(), w)) next = w;
          if (next < 0) break;
          prev = arm.back();
          arm.push_back(next);
        }
        arms.push_back(arm);
      }
      std::sort(arms.begin(), arms.end(),
                [](const auto& a, const auto& b) { return a.size() < b.size(); });
      std::size_t a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
      if (a0 == 1 && a1 == 1) {
        // D_n: long arm then branch then the two short arms.
        lc.type = GroupId{Series::D, n};
        std::vector<int> order(arms[2].rbegin(), arms[2].rend());
        order.push_back(branch);
        int u = arms[0][0], v = arms[1][0];
        order.push_back(std::min(u, v));
        order.push_back(std::max(u, v));
        lc.nodes = order;
      } else if (a0 == 1 && a1 == 2 && a2 <= 4) {
        // E_n in Bourbaki order: 1,2 are the ends of the 2-arm and 1-arm,
        // 3 the 2-arm's inner node, 4 the branch, then the long arm.
        lc.type = GroupId{Series::E, n};
        std::vector<int> order;
        order.push_back(arms[1][1]);
        order.push_back(arms[0][0]);
        order.push_back(arms[1][0]);
        order.push_back(branch);
        for (int v : arms[2]) order.push_back(v);
        lc.nodes = order;
      } else {
        throw std::runtime_error("subdiagram is not simply-laced of type ADE");
      }
    }
    out.push_back(std::move(lc));
  }
  std::sort(out.begin(), out.end(), [](const LeviComponent& a, const LeviComponent& b) {
    return a.nodes.front() < b.nodes.front();
  });
  return out;
}

std::uint64_t weyl_order(GroupId id) {
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  switch (id.series) {
    case Series::A:
      return factorial(id.rank + 1);
    case Series::D:
      return (std::uint64_t{1} << (id.rank - 1)) * factorial(id.rank);
    case Series::E:
      if (id.rank == 6) return 51840ull;
      if (id.rank == 7) return 2903040ull;
      return 696729600ull;
  }
  return 1;
}

std::uint64_t weyl_order(const RootDatum& datum, const std::vector<int>& nodes) {
  std::uint64_t order = 1;
  for (const auto& comp : levi_components(datum, nodes)) order *= weyl_order(comp.type);
  return order;
}

std::size_t positive_root_count(const RootDatum& datum,
                                const std::vector<int>& nodes) {
  std::set<int> pool(nodes.begin(), nodes.end());
  std::size_t count = 0;
  for (const auto& r : datum.positive_roots) {
    bool inside = true;
    for (int i = 0; i < datum.rank && inside; ++i)
      if (r[i] != 0 && !pool.count(i)) inside = false;
    if (inside) ++count;
  }
  return count;
}

namespace {

void embed_backtrack(const RootDatum& ambient, const std::vector<int>& active,
                     const RootDatum& pattern, std::vector<int>& map,
                     std::vector<bool>& used,
                     std::vector<std::vector<int>>& out) {
  std::size_t at = map.size();
  if (at == static_cast<std::size_t>(pattern.rank)) {
    out.push_back(map);
    return;
  }
  for (std::size_t idx = 0; idx < active.size(); ++idx) {
    if (used[idx]) continue;
    int cand = active[idx];
    bool ok = true;
    for (std::size_t p = 0; p < at && ok; ++p) {
      bool pat_edge = pattern.adjacent(static_cast<int>(at), static_cast<int>(p));
      bool amb_edge = ambient.adjacent(cand, map[p]);
      if (pat_edge != amb_edge) ok = false;
    }
    if (!ok) continue;
    map.push_back(cand);
    used[idx] = true;
    embed_backtrack(ambient, active, pattern, map, used, out);
    used[idx] = false;
    map.pop_back();
  }
}

} // namespace

std::vector<std::vector<int>> subdiagram_embeddings(
    const RootDatum& ambient, const std::vector<int>& active,
    const RootDatum& pattern) {
  std::vector<std::vector<int>> out;
  if (pattern.rank > static_cast<int>(active.size())) return out;
  std::vector<int> map;
  std::vector<bool> used(active.size(), false);
  embed_backtrack(ambient, active, pattern, map, used, out);
  return out;
}

std::vector<int> complement_nodes(const RootDatum& datum,
                                  const std::vector<int>& nodes) {
  std::set<int> pool(nodes.begin(), nodes.end());
  std::vector<int> out;
  for (int i = 0; i < datum.rank; ++i)
    if (!pool.count(i)) out.push_back(i);
  return out;
}

std::vector<int> all_nodes(const RootDatum& datum) {
  std::vector<int> out(datum.rank);
  for (int i = 0; i < datum.rank; ++i) out[i] = i;
  return out;
}

int w0_node_image(const RootDatum& datum, int node) {
  const GroupId id = datum.id;
  switch (id.series) {
    case Series::A:
      return id.rank - 1 - node;
    case Series::D:
      if (id.rank % 2 == 0) return node;
      // Odd D_n: -w_0 swaps the two fork ends.
      if (node == id.rank - 1) return id.rank - 2;
      if (node == id.rank - 2) return id.rank - 1;
      return node;
    case Series::E:
      if (id.rank == 6) {
        static const int flip[6] = {5, 1, 4, 3, 2, 0};
        return flip[node];
      }
      return node;  // E7, E8: -w_0 = id on the diagram
  }
  return node;
}

} // namespace dps
