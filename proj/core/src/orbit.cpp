#include "dps/orbit.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace dps {

std::uint64_t ExponentMultiset::mass() const {
  std::uint64_t total = 0;
  for (const auto& [lam, c] : counts) total += c;
  return total;
}

std::uint64_t ExponentMultiset::mult(const TorusCharacter& lambda) const {
  auto it = counts.find(lambda);
  return it == counts.end() ? 0 : it->second;
}

std::vector<TorusCharacter> ExponentMultiset::antidominant_members(
    const std::vector<int>& levi) const {
  std::vector<TorusCharacter> out;
  for (const auto& [lam, c] : counts)
    if (is_antidominant(lam, levi)) out.push_back(lam);
  std::sort(out.begin(), out.end(),
            [](const TorusCharacter& a, const TorusCharacter& b) {
              return render_character(a) < render_character(b);
            });
  return out;
}

bool ExponentMultiset::dominates(const ExponentMultiset& other) const {
  for (const auto& [lam, c] : other.counts)
    if (mult(lam) < c) return false;
  return true;
}

bool ExponentMultiset::operator==(const ExponentMultiset& other) const {
  return k == other.k && counts == other.counts;
}

std::uint64_t coset_count(const RootDatum& datum, const std::vector<int>& levi,
                          const std::vector<int>& theta) {
  return weyl_order(datum, levi) / weyl_order(datum, theta);
}

namespace {

constexpr int kMaxRank = 8;

using Marker = std::array<std::int8_t, kMaxRank>;

std::uint64_t pack_marker(const Marker& m) {
  std::uint64_t key = 0;
  for (int i = 0; i < kMaxRank; ++i)
    key |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(m[i] + 64))
           << (8 * i);
  return key;
}

Marker reflect_marker(const RootDatum& datum, Marker m, int j) {
  const std::int8_t mj = m[j];
  if (mj == 0) return m;
  for (int i = 0; i < datum.rank; ++i) {
    const int c = datum.cartan[j][i];
    if (c != 0) m[i] = static_cast<std::int8_t>(m[i] - c * mj);
  }
  return m;
}

struct OrbitState {
  Marker marker;
  TorusCharacter lambda;
};

// Common BFS over minimal coset representatives of W_levi / W_theta. Visits
// every coset exactly once (dedup on the full marker vector) and hands each
// visited lambda-translate to `accept`.
template <typename Accept>
void walk_cosets(const RootDatum& datum, const std::vector<int>& levi,
                 const std::vector<int>& theta, const TorusCharacter& lambda0,
                 int threads, Accept&& accept) {
  if (datum.rank > kMaxRank)
    throw std::runtime_error("rank above marker packing limit");
  std::set<int> theta_set(theta.begin(), theta.end());

  Marker start{};
  for (int i : levi)
    if (!theta_set.count(i)) start[i] = 1;

  std::unordered_set<std::uint64_t> visited;
  visited.insert(pack_marker(start));
  accept(lambda0);

  std::vector<OrbitState> frontier{{start, lambda0}};
  while (!frontier.empty()) {
    // Length in the weak order rises by exactly one per step, so candidates
    // generated from this level can never collide with earlier levels. That
    // lets worker threads prefilter against `visited` without locking.
    std::vector<std::vector<OrbitState>> buckets;
    const std::size_t n = frontier.size();
    int workers = threads > 1 && n >= 512 ? threads : 1;
    buckets.resize(workers);

    auto expand_chunk = [&](std::size_t lo, std::size_t hi,
                            std::vector<OrbitState>& out) {
      std::unordered_set<std::uint64_t> local;
      for (std::size_t idx = lo; idx < hi; ++idx) {
        const OrbitState& st = frontier[idx];
        for (int j : levi) {
          if (st.marker[j] <= 0) continue;
          Marker nm = reflect_marker(datum, st.marker, j);
          std::uint64_t key = pack_marker(nm);
          if (visited.count(key) || !local.insert(key).second) continue;
          out.push_back({nm, reflect(datum, st.lambda, j)});
        }
      }
    };

    if (workers == 1) {
      expand_chunk(0, n, buckets[0]);
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (n + workers - 1) / workers;
      for (int t = 0; t < workers; ++t) {
        std::size_t lo = std::min(n, t * chunk);
        std::size_t hi = std::min(n, lo + chunk);
        pool.emplace_back(expand_chunk, lo, hi, std::ref(buckets[t]));
      }
      for (auto& th : pool) th.join();
    }

    // Set-semantics merge: first occurrence wins, and any duplicate carries
    // the same lambda (the minimal representative is coset-determined), so
    // the result does not depend on the worker count.
    std::vector<OrbitState> next;
    for (auto& bucket : buckets) {
      for (auto& st : bucket) {
        if (!visited.insert(pack_marker(st.marker)).second) continue;
        accept(st.lambda);
        next.push_back(std::move(st));
      }
    }
    frontier = std::move(next);
  }
}

} // namespace

ExponentMultiset orbit_multiset(const RootDatum& datum,
                                const std::vector<int>& levi,
                                const std::vector<int>& theta,
                                const TorusCharacter& lambda0, int threads) {
  ExponentMultiset out;
  out.k = lambda0.k;
  walk_cosets(datum, levi, theta, lambda0, threads,
              [&](const TorusCharacter& lam) { out.counts[lam] += 1; });
  return out;
}

ExponentMultiset orbit_multiset_restricted(
    const RootDatum& datum, const std::vector<int>& levi,
    const std::vector<int>& theta, const TorusCharacter& lambda0,
    const std::vector<TorusCharacter>& only, int threads) {
  std::unordered_set<TorusCharacter, TorusCharacterHash> wanted(only.begin(),
                                                                only.end());
  ExponentMultiset out;
  out.k = lambda0.k;
  walk_cosets(datum, levi, theta, lambda0, threads,
              [&](const TorusCharacter& lam) {
                if (wanted.count(lam)) out.counts[lam] += 1;
              });
  return out;
}

std::vector<int> longest_coset_word(const RootDatum& datum,
                                    const std::vector<int>& levi,
                                    const std::vector<int>& theta) {
  std::set<int> theta_set(theta.begin(), theta.end());
  TorusCharacter marker;
  marker.k = 1;
  marker.re.assign(datum.rank, Rat(0));
  marker.fin.assign(datum.rank, 0);
  for (int i : levi)
    if (!theta_set.count(i)) marker.re[i] = Rat(1);
  auto [image, word] = antidominantize(datum, marker, levi);
  (void)image;
  const std::size_t expected =
      positive_root_count(datum, levi) - positive_root_count(datum, theta);
  if (word.size() != expected)
    throw std::runtime_error("longest coset word has unexpected length");
  return word;
}

ExponentMultiset brute_force_orbit_multiset(const RootDatum& datum,
                                            const std::vector<int>& levi,
                                            const std::vector<int>& theta,
                                            const TorusCharacter& lambda0,
                                            std::uint64_t cap) {
  if (weyl_order(datum, levi) > cap)
    throw std::runtime_error("brute-force orbit refused: Weyl group too big");

  // Regular start: positive on every levi node, so the W_levi-stabilizer is
  // trivial and each group element shows up as exactly one translate.
  TorusCharacter reg;
  reg.k = 1;
  reg.re.assign(datum.rank, Rat(0));
  reg.fin.assign(datum.rank, 0);
  for (int i : levi) reg.re[i] = Rat(1);

  struct Node {
    TorusCharacter vec;
    std::vector<int> word;  // reduced word, leftmost letter first
  };

  auto render_key = [](const TorusCharacter& c) { return render_character(c); };
  std::unordered_set<std::string> visited{render_key(reg)};
  std::vector<Node> frontier{{reg, {}}};

  ExponentMultiset out;
  out.k = lambda0.k;

  auto consider = [&](const Node& node) {
    // w is the minimal representative of w W_theta iff w(alpha_j) > 0 for
    // every j in theta, i.e. w^{-1} applied to the regular start stays
    // positive at theta. The reversed word is a word for w^{-1}.
    std::vector<int> rev(node.word.rbegin(), node.word.rend());
    TorusCharacter inv = apply_word(datum, reg, rev);
    for (int j : theta)
      if (!(inv.re[j] > Rat(0))) return;
    out.counts[apply_word(datum, lambda0, node.word)] += 1;
  };

  consider(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (int j : levi) {
        if (!(node.vec.re[j] > Rat(0))) continue;  // only ascend in length
        Node up;
        up.vec = reflect(datum, node.vec, j);
        if (!visited.insert(render_key(up.vec)).second) continue;
        up.word = node.word;
        up.word.insert(up.word.begin(), j);
        consider(up);
        next.push_back(std::move(up));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

} // namespace dps
