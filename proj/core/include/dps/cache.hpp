#pragma once

#include "dps/orbit.hpp"

#include <optional>
#include <string>

namespace dps {

// On-disk cache for coset-translate multisets. One file per request; format:
//   dps-cache 1
//   group <name>
//   levi <1-based nodes, comma separated>
//   theta <1-based nodes, comma separated>
//   k <order>
//   mass <total>
//   <rendered character>\t<multiplicity>     (sorted by rendered key)
// The loader re-adds the masses and rejects files whose total differs from
// `expected_mass` (pass 0 to skip the check).

std::string cache_key(const RootDatum& datum, const std::vector<int>& levi,
                      const std::vector<int>& theta,
                      const TorusCharacter& lambda0);

std::string cache_file_path(const std::string& dir, const std::string& key);

std::optional<ExponentMultiset> cache_load(const std::string& dir,
                                           const RootDatum& datum,
                                           const std::vector<int>& levi,
                                           const std::vector<int>& theta,
                                           const TorusCharacter& lambda0,
                                           std::uint64_t expected_mass);

void cache_store(const std::string& dir, const RootDatum& datum,
                 const std::vector<int>& levi, const std::vector<int>& theta,
                 const TorusCharacter& lambda0, const ExponentMultiset& ms);

// Default cache directory: DPS_CACHE_DIR environment variable, else "".
std::string default_cache_dir();

} // namespace dps
