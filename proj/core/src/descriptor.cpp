#include "dps/descriptor.hpp"

#include "dps/cache.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace dps {

namespace {

// Top-level comma split of "a,[b,c],d" -> {"a", "[b,c]", "d"}.
std::vector<std::string> split_top(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::optional<std::string> strip_brackets(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    return std::nullopt;
  return text.substr(1, text.size() - 2);
}

std::optional<int> parse_int(const std::string& text) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// rho_M for the sub-Levi on `theta`: the vector in the span of the theta
// simple roots pairing to 1 against every theta coroot. Returned as the
// full pairing vector <rho_M, alpha_i^vee> for all i.
std::vector<Rat> rho_levi_pairings(const RootDatum& datum,
                                   const std::vector<int>& theta) {
  const std::size_t m = theta.size();
  // Solve C[theta][theta]^T t = 1 for rho_M = sum t_j alpha_j.
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c)
      a[r][c] = Rat(datum.cartan[theta[c]][theta[r]]);
    a[r][m] = Rat(1);
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && a[piv][col] == Rat(0)) ++piv;
    if (piv == m) throw std::runtime_error("singular Levi Cartan block");
    std::swap(a[piv], a[col]);
    Rat lead = a[col][col];
    for (std::size_t j = col; j <= m; ++j) a[col][j] /= lead;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == Rat(0)) continue;
      Rat f = a[r][col];
      for (std::size_t j = col; j <= m; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<Rat> pairings(datum.rank, Rat(0));
  for (int i = 0; i < datum.rank; ++i) {
    Rat v(0);
    for (std::size_t j = 0; j < m; ++j)
      v += a[j][m] * Rat(datum.cartan[theta[j]][i]);
    pairings[i] = v;
  }
  return pairings;
}

} // namespace

std::optional<DPSDescriptor> parse_descriptor(const RootDatum& datum,
                                              const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  auto body = strip_brackets(t);
  if (!body) return std::nullopt;
  auto parts = split_top(*body);

  DPSDescriptor d;
  std::vector<int> nodes1;
  if (!parts.empty() && !parts[0].empty() && parts[0].front() == '[') {
    // Pair form: [[i,j],[s_i,s_j],[c_i,c_j],k].
    if (parts.size() != 4) return std::nullopt;
    auto nb = strip_brackets(parts[0]);
    auto sb = strip_brackets(parts[1]);
    auto cb = strip_brackets(parts[2]);
    auto kk = parse_int(parts[3]);
    if (!nb || !sb || !cb || !kk || *kk < 1) return std::nullopt;
    auto ns = split_top(*nb);
    auto ss = split_top(*sb);
    auto cs = split_top(*cb);
    if (ns.size() != 2 || ss.size() != 2 || cs.size() != 2) return std::nullopt;
    d.k = *kk;
    for (int m = 0; m < 2; ++m) {
      auto node = parse_int(ns[m]);
      auto s = parse_rational(ss[m]);
      auto c = parse_int(cs[m]);
      if (!node || !s || !c) return std::nullopt;
      nodes1.push_back(*node);
      d.s.push_back(*s);
      d.chi_pow.push_back(((*c % d.k) + d.k) % d.k);
    }
  } else {
    // Single form: [node,s,k] or [node,s,k,c].
    if (parts.size() != 3 && parts.size() != 4) return std::nullopt;
    auto node = parse_int(parts[0]);
    auto s = parse_rational(parts[1]);
    auto kk = parse_int(parts[2]);
    if (!node || !s || !kk || *kk < 1) return std::nullopt;
    d.k = *kk;
    int c = 1;
    if (parts.size() == 4) {
      auto cc = parse_int(parts[3]);
      if (!cc) return std::nullopt;
      c = *cc;
    }
    nodes1.push_back(*node);
    d.s.push_back(*s);
    d.chi_pow.push_back(((c % d.k) + d.k) % d.k);
  }

  for (int& n : nodes1) {
    if (n < 1 || n > datum.rank) return std::nullopt;
    d.nodes.push_back(n - 1);
  }
  if (d.nodes.size() == 2) {
    if (d.nodes[0] == d.nodes[1]) return std::nullopt;
    if (d.nodes[0] > d.nodes[1]) {
      std::swap(d.nodes[0], d.nodes[1]);
      std::swap(d.s[0], d.s[1]);
      std::swap(d.chi_pow[0], d.chi_pow[1]);
    }
    // At least one twist must have full order k (pair-datum side condition).
    const auto totative = [&](int c) {
      const int rep = c == 0 ? d.k : c;  // residues live in [0, k)
      return std::gcd(rep, d.k) == 1;
    };
    if (!totative(d.chi_pow[0]) && !totative(d.chi_pow[1]))
      return std::nullopt;
  }
  return d;
}

std::string render_descriptor(const DPSDescriptor& desc) {
  if (!desc.is_pair()) {
    std::string out = "[" + std::to_string(desc.nodes[0] + 1) + "," +
                      render_rational(desc.s[0]) + "," +
                      std::to_string(desc.k);
    if (desc.chi_pow[0] != 1 % desc.k)
      out += "," + std::to_string(desc.chi_pow[0]);
    return out + "]";
  }
  std::string out = "[[" + std::to_string(desc.nodes[0] + 1) + "," +
                    std::to_string(desc.nodes[1] + 1) + "],[" +
                    render_rational(desc.s[0]) + "," +
                    render_rational(desc.s[1]) + "],[" +
                    std::to_string(desc.chi_pow[0]) + "," +
                    std::to_string(desc.chi_pow[1]) + "]," +
                    std::to_string(desc.k) + "]";
  return out;
}

std::vector<int> theta_of(const RootDatum& datum, const DPSDescriptor& desc) {
  return complement_nodes(datum, desc.nodes);
}

TorusCharacter initial_exponent(const RootDatum& datum,
                                const DPSDescriptor& desc) {
  const std::vector<int> theta = theta_of(datum, desc);
  const std::vector<Rat> rho = rho_levi_pairings(datum, theta);
  TorusCharacter lambda;
  lambda.k = desc.k;
  lambda.re.assign(datum.rank, Rat(0));
  lambda.fin.assign(datum.rank, 0);
  for (int j : theta) lambda.re[j] = Rat(-1);
  for (std::size_t m = 0; m < desc.nodes.size(); ++m) {
    const int n = desc.nodes[m];
    lambda.re[n] = desc.s[m] - rho[n];
    lambda.fin[n] = desc.chi_pow[m];
  }
  return lambda;
}

DPSDescriptor invert(const RootDatum& datum, const DPSDescriptor& desc) {
  DPSDescriptor out;
  out.k = desc.k;
  std::vector<std::size_t> order(desc.nodes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<int> mapped(desc.nodes.size());
  for (std::size_t m = 0; m < desc.nodes.size(); ++m)
    mapped[m] = w0_node_image(datum, desc.nodes[m]);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return mapped[a] < mapped[b]; });
  for (std::size_t m : order) {
    out.nodes.push_back(mapped[m]);
    out.s.push_back(-desc.s[m]);
    out.chi_pow.push_back((desc.k - desc.chi_pow[m]) % desc.k);
  }
  return out;
}

TorusCharacter terminal_exponent(const RootDatum& datum,
                                 const DPSDescriptor& desc) {
  auto word = longest_coset_word(datum, all_nodes(datum), theta_of(datum, desc));
  return apply_word(datum, initial_exponent(datum, desc), word);
}

namespace {

std::uint64_t abstract_reflection_order(
    const std::vector<std::vector<int>>& pairing) {
  const int m = static_cast<int>(pairing.size());
  std::vector<int> comp(m, -1);
  std::uint64_t order = 1;
  for (int seed = 0; seed < m; ++seed) {
    if (comp[seed] >= 0) continue;
    std::vector<int> verts{seed};
    comp[seed] = seed;
    for (std::size_t at = 0; at < verts.size(); ++at)
      for (int j = 0; j < m; ++j)
        if (comp[j] < 0 && pairing[verts[at]][j] != 0) {
          comp[j] = seed;
          verts.push_back(j);
        }
    const int n = static_cast<int>(verts.size());
    auto degree = [&](int v) {
      int deg = 0;
      for (int w : verts)
        if (w != v && pairing[v][w] != 0) ++deg;
      return deg;
    };
    int branch = -1;
    for (int v : verts)
      if (degree(v) >= 3) branch = v;
    GroupId id;
    if (branch < 0) {
      id = GroupId{Series::A, n};
    } else {
      std::vector<int> arm_lengths;
      for (int v : verts) {
        if (pairing[v][branch] == 0 || v == branch) continue;
        int len = 1, prev = branch, cur = v;
        while (true) {
          int next = -1;
          for (int w : verts)
            if (w != prev && w != cur && pairing[cur][w] != 0) next = w;
          if (next < 0) break;
          prev = cur;
          cur = next;
          ++len;
        }
        arm_lengths.push_back(len);
      }
      std::sort(arm_lengths.begin(), arm_lengths.end());
      if (arm_lengths.size() != 3)
        throw std::runtime_error("stabilizer diagram is not of type ADE");
      if (arm_lengths[0] == 1 && arm_lengths[1] == 1)
        id = GroupId{Series::D, n};
      else if (arm_lengths[0] == 1 && arm_lengths[1] == 2 && arm_lengths[2] <= 4)
        id = GroupId{Series::E, n};
      else
        throw std::runtime_error("stabilizer diagram is not of type ADE");
    }
    order *= weyl_order(id);
  }
  return order;
}

} // namespace

std::uint64_t stabilizer_order(const RootDatum& datum,
                               const TorusCharacter& lambda,
                               std::uint64_t cap) {
  // Roots whose real pairing vanishes. Their reflections generate the full
  // stabilizer of the real part; among those elements we count the ones
  // fixing the chi powers too.
  std::vector<std::vector<int>> zroots;
  std::set<std::vector<int>> zset;
  for (const auto& beta : datum.positive_roots) {
    if (pair_root(lambda, beta).re == Rat(0)) {
      zroots.push_back(beta);
      zset.insert(beta);
    }
  }
  if (zroots.empty()) return 1;

  // Indecomposable elements are the simple system of the zero subsystem.
  std::vector<std::vector<int>> simples;
  for (const auto& beta : zroots) {
    bool decomposable = false;
    for (const auto& gamma : zroots) {
      if (gamma == beta) continue;
      std::vector<int> diff(datum.rank);
      bool nonneg = true;
      for (int i = 0; i < datum.rank; ++i) {
        diff[i] = beta[i] - gamma[i];
        if (diff[i] < 0) nonneg = false;
      }
      if (nonneg && zset.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.push_back(beta);
  }

  const int m = static_cast<int>(simples.size());
  std::vector<std::vector<int>> pairing(m, std::vector<int>(m, 0));
  // <gamma, delta^vee> = gamma^T C delta in the norm-2 normalization:
  // 2 on the diagonal, 0 or -1 between distinct simples of the subsystem.
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int i = 0; i < datum.rank; ++i)
        for (int j = 0; j < datum.rank; ++j)
          pairing[a][b] += simples[a][i] * datum.cartan[i][j] * simples[b][j];

  const std::uint64_t full = abstract_reflection_order(pairing);
  if (full > cap)
    throw std::runtime_error("stabilizer too large to enumerate");

  // <beta, alpha_i^vee> rows for the reflection action in pairing coords.
  std::vector<std::vector<int>> rows(m, std::vector<int>(datum.rank, 0));
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < datum.rank; ++i)
      for (int j = 0; j < datum.rank; ++j)
        rows[a][i] += simples[a][j] * datum.cartan[j][i];

  struct State {
    std::vector<int> rho;  // faithful: regular vector image
    std::vector<int> fin;
  };
  auto key_of = [](const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += std::to_string(x) + ".";
    return s;
  };

  State start;
  start.rho.assign(datum.rank, 1);
  start.fin = lambda.fin;
  std::unordered_set<std::string> seen{key_of(start.rho)};
  std::vector<State> frontier{start};
  std::uint64_t matches = start.fin == lambda.fin ? 1 : 0;

  while (!frontier.empty()) {
    std::vector<State> next;
    for (const State& st : frontier) {
      for (int a = 0; a < m; ++a) {
        long long rp = 0, fp = 0;
        for (int i = 0; i < datum.rank; ++i) {
          rp += static_cast<long long>(simples[a][i]) * st.rho[i];
          fp += static_cast<long long>(simples[a][i]) * st.fin[i];
        }
        State ns;
        ns.rho.resize(datum.rank);
        ns.fin.resize(datum.rank);
        for (int i = 0; i < datum.rank; ++i) {
          ns.rho[i] = st.rho[i] - static_cast<int>(rp) * rows[a][i];
          long long f = st.fin[i] - fp * rows[a][i];
          ns.fin[i] = static_cast<int>(((f % lambda.k) + lambda.k) % lambda.k);
        }
        if (!seen.insert(key_of(ns.rho)).second) continue;
        if (ns.fin == lambda.fin) ++matches;
        next.push_back(std::move(ns));
      }
    }
    frontier = std::move(next);
  }
  return matches;
}

bool is_regular(const RootDatum& datum, const DPSDescriptor& desc) {
  const TorusCharacter lambda = initial_exponent(datum, desc);
  // Any stabilizer element lies in the reflection group of the real-zero
  // roots; no such roots means regular without the enumeration.
  bool has_zero_root = false;
  for (const auto& beta : datum.positive_roots) {
    if (pair_root(lambda, beta).re == Rat(0)) {
      has_zero_root = true;
      break;
    }
  }
  if (!has_zero_root) return true;
  return stabilizer_order(datum, lambda) == 1;
}

std::optional<DPSDescriptor> pair_descriptor_from_character(
    const RootDatum& datum, const TorusCharacter& target, int i, int j) {
  if (i == j) return std::nullopt;
  if (i > j) std::swap(i, j);
  std::vector<int> nodes{i, j};
  std::vector<int> theta = complement_nodes(datum, nodes);
  for (int t : theta)
    if (target.re[t] != Rat(-1) || target.fin[t] != 0) return std::nullopt;
  const std::vector<Rat> rho = rho_levi_pairings(datum, theta);
  DPSDescriptor d;
  d.k = target.k;
  d.nodes = nodes;
  for (int n : nodes) {
    d.s.push_back(target.re[n] + rho[n]);
    d.chi_pow.push_back(target.fin[n]);
  }
  return d;
}

std::pair<DPSDescriptor, TorusCharacter> restrict_to_sublevi(
    const RootDatum& datum, const DPSDescriptor& desc, int j) {
  if (desc.is_pair())
    throw std::invalid_argument("restriction starts from a one-node datum");
  if (j == desc.nodes[0])
    throw std::invalid_argument("second node must differ from the datum node");
  TorusCharacter lambda0 = initial_exponent(datum, desc);
  auto out = pair_descriptor_from_character(datum, lambda0, desc.nodes[0], j);
  if (!out)
    throw std::logic_error("initial exponent failed its own restriction");
  return {*out, std::move(lambda0)};
}

ExponentMultiset jacquet_multiset(const RootDatum& datum,
                                  const DPSDescriptor& desc, int threads,
                                  const std::string& cache_dir) {
  const std::vector<int> levi = all_nodes(datum);
  const std::vector<int> theta = theta_of(datum, desc);
  const TorusCharacter lambda0 = initial_exponent(datum, desc);
  const std::uint64_t expected = coset_count(datum, levi, theta);
  if (!cache_dir.empty()) {
    if (auto hit = cache_load(cache_dir, datum, levi, theta, lambda0, expected))
      return *hit;
  }
  ExponentMultiset ms = orbit_multiset(datum, levi, theta, lambda0, threads);
  if (!cache_dir.empty()) cache_store(cache_dir, datum, levi, theta, lambda0, ms);
  return ms;
}

std::uint64_t iwahori_dimension(const ExponentMultiset& jacquet) {
  return jacquet.mass();
}

} // namespace dps
