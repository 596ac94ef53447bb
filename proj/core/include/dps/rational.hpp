#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace dps {

// All torus-character arithmetic is exact. Magnitudes stay tiny (pairings of
// bounded-height coroots against bounded table parameters), so a 64-bit
// rational is ample.
using Rat = boost::rational<long long>;

// "-3/2", "7", "0" <-> Rat. Returns nullopt on malformed input.
std::optional<Rat> parse_rational(const std::string& text);
std::string render_rational(const Rat& r);

} // namespace dps
