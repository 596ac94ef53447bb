#include "dps/torus_character.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace dps {

std::size_t TorusCharacterHash::operator()(const TorusCharacter& c) const {
  auto mix = [](std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
  };
  std::size_t h = std::hash<int>{}(c.k);
  for (const Rat& r : c.re) {
    h = mix(h, std::hash<long long>{}(r.numerator()));
    h = mix(h, std::hash<long long>{}(r.denominator()));
  }
  for (int f : c.fin) h = mix(h, std::hash<int>{}(f));
  return h;
}

PairingValue pair_root(const TorusCharacter& lambda,
                       const std::vector<int>& root) {
  PairingValue v;
  v.re = Rat(0);
  long long fin = 0;
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (root[i] == 0) continue;
    v.re += Rat(root[i]) * lambda.re[i];
    fin += static_cast<long long>(root[i]) * lambda.fin[i];
  }
  v.fin = static_cast<int>(((fin % lambda.k) + lambda.k) % lambda.k);
  return v;
}

TorusCharacter reflect(const RootDatum& datum, TorusCharacter lambda, int j) {
  const Rat rj = lambda.re[j];
  const int fj = lambda.fin[j];
  for (int i = 0; i < datum.rank; ++i) {
    const int c = datum.cartan[j][i];
    if (c == 0) continue;
    lambda.re[i] -= Rat(c) * rj;
    long long f = lambda.fin[i] - static_cast<long long>(c) * fj;
    lambda.fin[i] = static_cast<int>(((f % lambda.k) + lambda.k) % lambda.k);
  }
  return lambda;
}

TorusCharacter apply_word(const RootDatum& datum, TorusCharacter lambda,
                          std::span<const int> word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    lambda = reflect(datum, std::move(lambda), *it);
  return lambda;
}

bool is_antidominant(const TorusCharacter& lambda,
                     const std::vector<int>& levi) {
  for (int j : levi)
    if (lambda.re[j] > Rat(0)) return false;
  return true;
}

std::pair<TorusCharacter, std::vector<int>> antidominantize(
    const RootDatum& datum, TorusCharacter lambda,
    const std::vector<int>& levi) {
  std::vector<int> word;
  while (true) {
    int pick = -1;
    for (int j : levi) {
      if (lambda.re[j] > Rat(0) && (pick < 0 || j < pick)) pick = j;
    }
    if (pick < 0) break;
    lambda = reflect(datum, std::move(lambda), pick);
    word.push_back(pick);
  }
  // apply_word runs right-to-left, so the first reflection goes last.
  std::reverse(word.begin(), word.end());
  return {std::move(lambda), std::move(word)};
}

Rat invariant_norm(const RootDatum& datum, const TorusCharacter& lambda) {
  Rat total(0);
  for (int i = 0; i < datum.rank; ++i) {
    if (lambda.re[i] == Rat(0)) continue;
    for (int j = 0; j < datum.rank; ++j)
      total += lambda.re[i] * datum.inverse_cartan[i][j] * lambda.re[j];
  }
  return total;
}

std::string render_character(const TorusCharacter& lambda) {
  std::string out = "(";
  for (std::size_t i = 0; i < lambda.re.size(); ++i) {
    if (i) out += ",";
    const int f = lambda.fin[i];
    if (f == 0) {
      out += render_rational(lambda.re[i]);
    } else {
      std::string chi = f == 1 ? "x" : "x^" + std::to_string(f);
      if (lambda.re[i] == Rat(0))
        out += chi;
      else
        out += render_rational(lambda.re[i]) + "+" + chi;
    }
  }
  out += ")";
  return out;
}

namespace {

// One coordinate: "R", "R+x", "R+x^p", "x", "x^p", "chi", "chi^p".
std::pair<Rat, int> parse_coordinate(const std::string& raw, int k) {
  std::string t;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty character coordinate");

  std::size_t xpos = t.find("chi");
  std::size_t xlen = 3;
  if (xpos == std::string::npos) {
    xpos = t.find('x');
    xlen = 1;
  }
  Rat re(0);
  int fin = 0;
  if (xpos == std::string::npos) {
    auto r = parse_rational(t);
    if (!r) throw std::invalid_argument("bad character coordinate: " + raw);
    re = *r;
  } else {
    std::string head = t.substr(0, xpos);
    std::string tail = t.substr(xpos + xlen);
    if (!head.empty()) {
      if (head.back() != '+')
        throw std::invalid_argument("bad character coordinate: " + raw);
      head.pop_back();
      if (!head.empty()) {
        auto r = parse_rational(head);
        if (!r) throw std::invalid_argument("bad character coordinate: " + raw);
        re = *r;
      }
    }
    int power = 1;
    if (!tail.empty()) {
      if (tail[0] != '^')
        throw std::invalid_argument("bad character coordinate: " + raw);
      power = std::stoi(tail.substr(1));
    }
    fin = ((power % k) + k) % k;
  }
  return {re, fin};
}

} // namespace

TorusCharacter parse_character(const RootDatum& datum, const std::string& text,
                               int k) {
  std::string body = text;
  if (!body.empty() && body.front() == '(') body = body.substr(1);
  if (!body.empty() && body.back() == ')') body.pop_back();
  TorusCharacter lambda;
  lambda.k = k;
  std::stringstream ss(body);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    auto [re, fin] = parse_coordinate(piece, k);
    lambda.re.push_back(re);
    lambda.fin.push_back(fin);
  }
  if (static_cast<int>(lambda.re.size()) != datum.rank)
    throw std::invalid_argument("character has wrong rank: " + text);
  return lambda;
}

} // namespace dps
