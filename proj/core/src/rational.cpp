#include "dps/rational.hpp"

#include <cstdlib>
#include <stdexcept>

namespace dps {

std::optional<Rat> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    long long num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash))
      return std::nullopt;
    if (slash == std::string::npos) return Rat(num);
    long long den = std::stoll(text.substr(slash + 1), &used);
    if (used != text.size() - slash - 1 || den == 0) return std::nullopt;
    return Rat(num, den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string render_rational(const Rat& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    out += '/';
    out += std::to_string(r.denominator());
  }
  return out;
}

} // namespace dps
