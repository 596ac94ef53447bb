#include "dps/reducibility.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace dps {

namespace {

// Deterministic structural order (cheaper than comparing rendered strings).
bool char_less(const TorusCharacter& a, const TorusCharacter& b) {
  if (a.k != b.k) return a.k < b.k;
  for (std::size_t i = 0; i < a.re.size(); ++i)
    if (a.re[i] != b.re[i]) return a.re[i] < b.re[i];
  return a.fin < b.fin;
}

// Witness multiset, restricted to the support of desc_ms when the witness
// is a pair datum (whose full orbit is walked but not stored).
ExponentMultiset witness_multiset(const RootDatum& datum,
                                  const DPSDescriptor& witness,
                                  const ExponentMultiset& desc_ms,
                                  int threads, const std::string& cache_dir) {
  if (!witness.is_pair())
    return jacquet_multiset(datum, witness, threads, cache_dir);
  std::vector<TorusCharacter> only;
  only.reserve(desc_ms.counts.size());
  for (const auto& [lam, mult] : desc_ms.counts) only.push_back(lam);
  return orbit_multiset_restricted(datum, all_nodes(datum),
                                   theta_of(datum, witness),
                                   initial_exponent(datum, witness), only,
                                   threads);
}

TadicReport tadic_core(const ExponentMultiset& desc_ms,
                       const std::vector<TorusCharacter>& desc_antidominant,
                       const ExponentMultiset& wit_ms) {
  TadicReport rep;
  for (const TorusCharacter& lam : desc_antidominant)
    if (wit_ms.mult(lam) > 0) rep.shared_antidominant.push_back(lam);
  std::sort(rep.shared_antidominant.begin(), rep.shared_antidominant.end(),
            [](const TorusCharacter& a, const TorusCharacter& b) {
              return render_character(a) < render_character(b);
            });

  const TorusCharacter* excess = nullptr;
  for (const auto& [lam, mult] : desc_ms.counts) {
    if (mult > wit_ms.mult(lam) && (!excess || char_less(lam, *excess)))
      excess = &lam;
  }
  if (excess) {
    rep.excess_exponent = *excess;
    rep.excess_mult_desc = desc_ms.mult(*excess);
    rep.excess_mult_witness = wit_ms.mult(*excess);
  }
  rep.reducible_confirmed =
      !rep.shared_antidominant.empty() && excess != nullptr;
  return rep;
}

}  // namespace

TadicReport tadic_test(const RootDatum& datum, const DPSDescriptor& desc,
                       const DPSDescriptor& witness, int threads,
                       const std::string& cache_dir) {
  if (render_descriptor(desc) == render_descriptor(witness))
    throw std::invalid_argument(
        "the witness must be a different datum than the one under test");
  const ExponentMultiset desc_ms =
      jacquet_multiset(datum, desc, threads, cache_dir);
  const auto ad = desc_ms.antidominant_members(all_nodes(datum));
  // A witness datum built on chi^a for a coprime to k is just as valid an
  // auxiliary representation, and published tables fix an arbitrary
  // primitive character. Try the powers as given first, then each scaling.
  TadicReport first;
  bool have_first = false;
  for (int a = 1; a <= witness.k; ++a) {
    if (std::gcd(a, witness.k) != 1) continue;
    DPSDescriptor adjusted = witness;
    for (int& p : adjusted.chi_pow) p = p * a % witness.k;
    if (render_descriptor(desc) == render_descriptor(adjusted)) continue;
    const ExponentMultiset wit_ms =
        witness_multiset(datum, adjusted, desc_ms, threads, cache_dir);
    TadicReport rep = tadic_core(desc_ms, ad, wit_ms);
    rep.witness_used = adjusted;
    if (rep.reducible_confirmed) return rep;
    if (!have_first) {
      first = std::move(rep);
      have_first = true;
    }
  }
  if (!have_first)
    throw std::invalid_argument(
        "the witness must be a different datum than the one under test");
  return first;
}

bool regular_reducible(const RootDatum& datum, const DPSDescriptor& desc) {
  const TorusCharacter lambda = initial_exponent(datum, desc);
  std::vector<char> in_levi(static_cast<std::size_t>(datum.rank), 1);
  for (int n : desc.nodes) in_levi[n] = 0;
  for (const auto& beta : datum.positive_roots) {
    bool outside = false;
    for (int i = 0; i < datum.rank && !outside; ++i)
      if (beta[i] != 0 && !in_levi[i]) outside = true;
    if (!outside) continue;
    const PairingValue v = pair_root(lambda, beta);
    if (v.is_trivial_fin() && (v.re == Rat(1) || v.re == Rat(-1))) return true;
  }
  return false;
}

namespace {

std::optional<long long> perfect_square_root(long long v) {
  if (v < 0) return std::nullopt;
  const auto guess =
      static_cast<long long>(std::llround(std::sqrt(static_cast<double>(v))));
  for (long long c = std::max<long long>(0, guess - 2); c <= guess + 2; ++c)
    if (c * c == v) return c;
  return std::nullopt;
}

// Rational solutions of a t^2 + b t + c = 0 (a != 0).
std::vector<Rat> solve_quadratic(const Rat& a, const Rat& b, const Rat& c) {
  const Rat disc = b * b - Rat(4) * a * c;
  if (disc < Rat(0)) return {};
  const auto sn = perfect_square_root(disc.numerator());
  const auto sd = perfect_square_root(disc.denominator());
  if (!sn || !sd) return {};
  const Rat root(*sn, *sd);
  if (root == Rat(0)) return {-b / (Rat(2) * a)};
  return {(-b + root) / (Rat(2) * a), (-b - root) / (Rat(2) * a)};
}

// Real part of the initial exponent, with the node parameters left at zero.
std::vector<Rat> base_real_part(const RootDatum& datum,
                                const std::vector<int>& nodes, int k) {
  DPSDescriptor zero;
  zero.nodes = nodes;
  zero.s.assign(nodes.size(), Rat(0));
  zero.chi_pow.assign(nodes.size(), 0);
  zero.k = k;
  return initial_exponent(datum, zero).re;
}

Rat quad_form(const RootDatum& datum, const std::vector<Rat>& v) {
  Rat total(0);
  for (int i = 0; i < datum.rank; ++i)
    for (int j = 0; j < datum.rank; ++j)
      total += v[i] * datum.inverse_cartan[i][j] * v[j];
  return total;
}

Rat inverse_row_dot(const RootDatum& datum, int row,
                    const std::vector<Rat>& v) {
  Rat total(0);
  for (int j = 0; j < datum.rank; ++j)
    total += datum.inverse_cartan[row][j] * v[j];
  return total;
}

std::vector<Rat> grid_values(long long max_den, long long max_abs) {
  std::vector<Rat> values;
  for (long long den = 1; den <= max_den; ++den)
    for (long long num = -max_abs * den; num <= max_abs * den; ++num)
      if (std::gcd(std::llabs(num), den) == 1 || num == 0)
        if (num == 0 ? den == 1 : true) values.emplace_back(num, den);
  return values;
}

std::vector<int> totatives(int k) {
  std::vector<int> out;
  for (int l = 1; l <= k; ++l)
    if (std::gcd(l, k) == 1) out.push_back(l % k);
  return out;
}

}  // namespace

std::vector<std::pair<DPSDescriptor, TadicReport>> witness_search(
    const RootDatum& datum, const DPSDescriptor& desc,
    const WitnessSearchOptions& opts) {
  const int k = desc.k;
  const TorusCharacter lambda0 = initial_exponent(datum, desc);
  const Rat target_norm = invariant_norm(datum, lambda0);
  const std::vector<Rat> target_real =
      antidominantize(datum, lambda0, all_nodes(datum)).first.re;
  const std::string desc_text = render_descriptor(desc);

  // Phase 1: solve the norm equation symbolically. Real parts do not depend
  // on the twist powers, so candidates are gathered as (nodes, s) shapes
  // first and expanded over powers later.
  struct Shape {
    std::vector<int> nodes;
    std::vector<Rat> s;
  };
  std::vector<Shape> shapes;
  for (int j = 0; j < datum.rank; ++j) {
    const std::vector<Rat> base = base_real_part(datum, {j}, k);
    const Rat a = datum.inverse_cartan[j][j];
    const Rat b = Rat(2) * inverse_row_dot(datum, j, base);
    const Rat c = quad_form(datum, base) - target_norm;
    for (const Rat& t : solve_quadratic(a, b, c))
      shapes.push_back({{j}, {t}});
  }
  if (opts.include_pairs) {
    const std::vector<Rat> grid =
        grid_values(opts.max_denominator, opts.max_abs_numerator);
    for (int i = 0; i < datum.rank; ++i) {
      for (int j = 0; j < datum.rank; ++j) {
        if (i == j) continue;
        const std::vector<int> nodes =
            i < j ? std::vector<int>{i, j} : std::vector<int>{j, i};
        if (nodes[0] != i) continue;  // each unordered pair once, solved twice
        for (int solved : {0, 1}) {
          const int fixed_node = nodes[1 - solved];
          const int free_node = nodes[solved];
          const std::vector<Rat> base = base_real_part(datum, nodes, k);
          const Rat a = datum.inverse_cartan[free_node][free_node];
          const Rat g_free = inverse_row_dot(datum, free_node, base);
          const Rat g_cross = datum.inverse_cartan[free_node][fixed_node];
          const Rat c0 = quad_form(datum, base) - target_norm;
          const Rat g_fixed = inverse_row_dot(datum, fixed_node, base);
          const Rat a_fixed = datum.inverse_cartan[fixed_node][fixed_node];
          for (const Rat& u : grid) {
            const Rat b = Rat(2) * (g_free + u * g_cross);
            const Rat c = c0 + Rat(2) * u * g_fixed + u * u * a_fixed;
            for (const Rat& t : solve_quadratic(a, b, c)) {
              Shape shape;
              shape.nodes = nodes;
              shape.s.resize(2);
              shape.s[1 - solved] = u;
              shape.s[solved] = t;
              shapes.push_back(std::move(shape));
            }
          }
        }
      }
    }
  }

  // Phase 2: keep shapes whose orbit can meet the orbit of lambda0 at all
  // (equal anti-dominant real vectors). The twist powers do not move the
  // anti-dominantization path, so this is a per-shape test.
  std::vector<char> keep(shapes.size(), 0);
  {
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
      for (std::size_t idx = next.fetch_add(1); idx < shapes.size();
           idx = next.fetch_add(1)) {
        TorusCharacter probe;
        probe.k = k;
        probe.fin.assign(static_cast<std::size_t>(datum.rank), 0);
        DPSDescriptor cand;
        cand.nodes = shapes[idx].nodes;
        cand.s = shapes[idx].s;
        cand.chi_pow.assign(cand.nodes.size(), 0);
        cand.k = k;
        probe.re = initial_exponent(datum, cand).re;
        keep[idx] =
            antidominantize(datum, probe, all_nodes(datum)).first.re ==
            target_real;
      }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < opts.threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }

  // Phase 3: expand the surviving shapes over twist powers and run the full
  // multiset test against the shared Jacquet restriction.
  std::vector<DPSDescriptor> candidates;
  std::set<std::string> seen{desc_text};
  const std::vector<int> tot = totatives(k);
  for (std::size_t idx = 0; idx < shapes.size(); ++idx) {
    if (!keep[idx]) continue;
    const Shape& shape = shapes[idx];
    DPSDescriptor cand;
    cand.nodes = shape.nodes;
    cand.s = shape.s;
    cand.k = k;
    if (shape.nodes.size() == 1) {
      for (int l : tot) {
        cand.chi_pow = {l};
        if (seen.insert(render_descriptor(cand)).second)
          candidates.push_back(cand);
      }
    } else {
      for (int ci = 0; ci < k; ++ci) {
        for (int cj = 0; cj < k; ++cj) {
          const bool full_order =
              std::gcd(ci == 0 ? k : ci, k) == 1 || std::gcd(cj == 0 ? k : cj, k) == 1;
          if (!full_order) continue;
          cand.chi_pow = {ci, cj};
          if (seen.insert(render_descriptor(cand)).second)
            candidates.push_back(cand);
        }
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const DPSDescriptor& a, const DPSDescriptor& b) {
              return render_descriptor(a) < render_descriptor(b);
            });

  std::vector<std::pair<DPSDescriptor, TadicReport>> results;
  if (candidates.empty()) return results;
  const ExponentMultiset desc_ms =
      jacquet_multiset(datum, desc, opts.threads, opts.cache_dir);
  const auto ad = desc_ms.antidominant_members(all_nodes(datum));

  // Fin decorations occurring at the anti-dominant real point of the case
  // orbit. A candidate seed lies in that orbit exactly when its own
  // anti-dominantization carries one of these decorations, so any other
  // candidate shares no exponent and can skip the restricted walk entirely.
  const auto pack_fins = [](const std::vector<int>& fin) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < fin.size(); ++i)
      key |= static_cast<std::uint64_t>(fin[i]) << (3 * i);
    return key;
  };
  std::unordered_set<std::uint64_t> orbit_fins;
  for (const TorusCharacter& member : ad) orbit_fins.insert(pack_fins(member.fin));

  for (const DPSDescriptor& cand : candidates) {
    const TorusCharacter dec =
        antidominantize(datum, initial_exponent(datum, cand), all_nodes(datum))
            .first;
    if (orbit_fins.count(pack_fins(dec.fin)) == 0) continue;
    const ExponentMultiset wit_ms =
        witness_multiset(datum, cand, desc_ms, opts.threads, opts.cache_dir);
    TadicReport rep = tadic_core(desc_ms, ad, wit_ms);
    if (!rep.reducible_confirmed) continue;
    rep.witness_used = cand;
    results.emplace_back(cand, std::move(rep));
    if (opts.max_results != 0 && results.size() >= opts.max_results) break;
  }
  return results;
}

} // namespace dps
