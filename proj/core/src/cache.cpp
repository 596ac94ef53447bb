#include "dps/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace dps {

namespace {

std::string join_nodes(const std::vector<int>& nodes) {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(nodes[i] + 1);
  }
  return out;
}

// Filename-safe spelling of a rendered character; injective, so distinct
// starting exponents never share a cache file.
std::string sanitize(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '(': case ')': break;
      case ',': out += '_'; break;
      case '-': out += 'm'; break;
      case '/': out += 'o'; break;
      case '+': out += 'p'; break;
      case '^': out += 'e'; break;
      default: out += c;
    }
  }
  return out;
}

} // namespace

std::string cache_key(const RootDatum& datum, const std::vector<int>& levi,
                      const std::vector<int>& theta,
                      const TorusCharacter& lambda0) {
  std::string key = datum.id.str();
  key += "_k" + std::to_string(lambda0.k);
  key += "_L" + sanitize(join_nodes(levi));
  key += "_T" + sanitize(join_nodes(theta));
  key += "_" + sanitize(render_character(lambda0));
  return key;
}

std::string cache_file_path(const std::string& dir, const std::string& key) {
  return dir + "/" + key + ".tsv";
}

std::optional<ExponentMultiset> cache_load(const std::string& dir,
                                           const RootDatum& datum,
                                           const std::vector<int>& levi,
                                           const std::vector<int>& theta,
                                           const TorusCharacter& lambda0,
                                           std::uint64_t expected_mass) {
  std::ifstream in(cache_file_path(dir, cache_key(datum, levi, theta, lambda0)));
  if (!in) return std::nullopt;

  auto expect_line = [&](const std::string& want) {
    std::string line;
    if (!std::getline(in, line)) return false;
    return line == want;
  };
  if (!expect_line("dps-cache 1")) return std::nullopt;
  if (!expect_line("group " + datum.id.str())) return std::nullopt;
  if (!expect_line("levi " + join_nodes(levi))) return std::nullopt;
  if (!expect_line("theta " + join_nodes(theta))) return std::nullopt;
  if (!expect_line("k " + std::to_string(lambda0.k))) return std::nullopt;

  std::string mass_line;
  if (!std::getline(in, mass_line) || mass_line.rfind("mass ", 0) != 0)
    return std::nullopt;
  std::uint64_t mass = 0;
  try {
    mass = std::stoull(mass_line.substr(5));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (expected_mass != 0 && mass != expected_mass) return std::nullopt;

  ExponentMultiset ms;
  ms.k = lambda0.k;
  std::uint64_t total = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) return std::nullopt;
    std::uint64_t mult = 0;
    TorusCharacter lam;
    try {
      lam = parse_character(datum, line.substr(0, tab), lambda0.k);
      mult = std::stoull(line.substr(tab + 1));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    ms.counts[lam] += mult;
    total += mult;
  }
  if (total != mass) return std::nullopt;
  return ms;
}

void cache_store(const std::string& dir, const RootDatum& datum,
                 const std::vector<int>& levi, const std::vector<int>& theta,
                 const TorusCharacter& lambda0, const ExponentMultiset& ms) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;  // caching is best-effort

  const std::string path =
      cache_file_path(dir, cache_key(datum, levi, theta, lambda0));
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << "dps-cache 1\n";
    out << "group " << datum.id.str() << "\n";
    out << "levi " << join_nodes(levi) << "\n";
    out << "theta " << join_nodes(theta) << "\n";
    out << "k " << lambda0.k << "\n";
    out << "mass " << ms.mass() << "\n";
    std::vector<std::pair<std::string, std::uint64_t>> rows;
    rows.reserve(ms.counts.size());
    for (const auto& [lam, c] : ms.counts)
      rows.push_back({render_character(lam), c});
    std::sort(rows.begin(), rows.end());
    for (const auto& [key, c] : rows) out << key << "\t" << c << "\n";
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

std::string default_cache_dir() {
  const char* env = std::getenv("DPS_CACHE_DIR");
  return env ? env : "";
}

} // namespace dps
